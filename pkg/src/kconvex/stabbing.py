"""Crossing analysis of lines against polygons and the exact stabbing number."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

import numpy as np

from .exactgeom import Direction, Line, Point, Polygon, sign
from .perturb import patterns, realize, realize_signs


@dataclass(frozen=True)
class TransversalCrossing:
    param: Fraction

    @property
    def start(self):
        return self.param

    end = start


@dataclass(frozen=True)
class Touch:
    param: Fraction

    @property
    def start(self):
        return self.param

    end = start


@dataclass(frozen=True)
class OverlapRun:
    param_start: Fraction
    param_end: Fraction
    crossing: bool
    vertices: tuple[int, ...] = field(default=(), compare=False)

    @property
    def start(self):
        return self.param_start

    @property
    def end(self):
        return self.param_end


Event = Union[TransversalCrossing, Touch, OverlapRun]


@dataclass(frozen=True)
class LineProfile:
    line: Line
    events: tuple[Event, ...]
    inside_intervals: tuple[tuple[Fraction, Fraction], ...]

    @property
    def crossing_count(self) -> int:
        return sum(
            1
            for e in self.events
            if isinstance(e, TransversalCrossing) or (isinstance(e, OverlapRun) and e.crossing)
        )

    @property
    def components(self) -> int:
        return len(self.inside_intervals)


@dataclass(frozen=True)
class StabbingCertificate:
    value: int
    witness_line: Line

    def to_json(self) -> dict:
        return {"stabbing_number": self.value, "witness_line": self.witness_line.to_json()}


def line_profile(L: Line, P: Polygon) -> LineProfile:
    """Classify every incidence of L with the boundary of P.

    A maximal run of on-line boundary (a single vertex or a chain of edges)
    is a crossing iff the boundary is on different sides just before and
    just after it; contained edges contribute nothing else.
    """
    verts = P.vertices
    n = len(verts)
    sides = [L.side(v) for v in verts]
    events: list[Event] = []

    for i in range(n):
        j = (i + 1) % n
        if sides[i] * sides[j] < 0:
            gi = L.side_value(verts[i])
            gj = L.side_value(verts[j])
            ti, tj = L.param(verts[i]), L.param(verts[j])
            lam = Fraction(gi) / (gi - gj)
            events.append(TransversalCrossing(ti + lam * (tj - ti)))

    if any(s == 0 for s in sides):
        start = next(i for i in range(n) if sides[i] != 0)
        k = 1
        while k <= n:
            i = (start + k) % n
            if sides[i] != 0:
                k += 1
                continue
            run = []
            while sides[(start + k) % n] == 0:
                run.append((start + k) % n)
                k += 1
            before = sides[(run[0] - 1) % n]
            after = sides[(start + k) % n]
            params = [L.param(verts[r]) for r in run]
            if len(run) == 1:
                cls = Touch if before == after else TransversalCrossing
                events.append(cls(params[0]))
            else:
                events.append(OverlapRun(min(params), max(params), before != after, tuple(run)))

    events.sort(key=lambda e: e.start)

    intervals: list[tuple[Fraction, Fraction]] = []
    inside = False  # status of the open gap before the current event
    for e in events:
        if not inside:
            intervals.append((e.start, e.end))
        else:
            lo, _ = intervals[-1]
            intervals[-1] = (lo, e.end)
        if isinstance(e, TransversalCrossing) or (isinstance(e, OverlapRun) and e.crossing):
            inside = not inside
    return LineProfile(L, tuple(events), tuple(intervals))


def crossing_count(L: Line, P: Polygon) -> int:
    return line_profile(L, P).crossing_count


def components_on_line(L: Line, P: Polygon) -> int:
    return len(line_profile(L, P).inside_intervals)


def segment_components(x, y, P: Polygon) -> int:
    """Components of the closed segment xy intersected with P."""
    x, y = Point.of(*x), Point.of(*y)
    if x == y:
        raise ValueError("segment endpoints coincide")
    L = Line.through(x, y)
    lo, hi = sorted((L.param(x), L.param(y)))
    return sum(1 for a, b in line_profile(L, P).inside_intervals if a <= hi and b >= lo)


# -- exact stabbing number -------------------------------------------------

_INT64_SAFE = 1 << 29


def _coord_arrays(P: Polygon):
    xs, ys = P.integer_coords
    big = max(max(abs(v) for v in xs), max(abs(v) for v in ys))
    dtype = np.int64 if big < _INT64_SAFE else object
    return np.array(xs, dtype=dtype), np.array(ys, dtype=dtype)


def _best_pattern(on: list[int], ts: dict[int, int], S, n: int):
    """Max crossing contribution of the edges touching on-line vertices.

    ``on`` are the on-line vertex indices, ``ts`` their parameters along the
    line, ``S`` the side signs. Returns (count, on-line sign assignment,
    touched edge indices).
    """
    onset = set(on)
    touching = set()
    for k in on:
        touching.add((k - 1) % n)
        touching.add(k)
    best, best_signs = -1, None
    for kind, tau, sense in patterns([ts[k] for k in on]):
        if kind == "offset":
            assign = {k: sense for k in on}
        else:
            assign = {k: (sense if ts[k] > tau else -sense) for k in on}

        def s_of(k):
            return assign[k] if k in onset else S[k]

        cnt = sum(1 for e in touching if s_of(e) != s_of((e + 1) % n))
        if cnt > best:
            best, best_signs = cnt, assign
    return best, best_signs, touching


def _scan(P: Polygon):
    """Yield (count, base line spec, on-line signs) for every candidate line.

    Sides and parameters are taken in scaled integer coordinates relative
    to the direction from the first to the second defining vertex.
    """
    n = P.n
    X, Y = _coord_arrays(P)
    xs, ys = P.integer_coords
    for i in range(n - 1):
        dX = X - xs[i]
        dY = Y - ys[i]
        js = np.arange(i + 1, n)
        # rows: partner vertex j; columns: vertex k
        M = np.outer(dX[js], dY) - np.outer(dY[js], dX)
        if M.dtype == object:
            S = np.array([[sign(v) for v in row] for row in M], dtype=np.int8)
        else:
            S = np.sign(M).astype(np.int8)
        generic = (S * np.roll(S, -1, axis=1)) < 0
        totals = generic.sum(axis=1)
        for row, j in enumerate(js.tolist()):
            srow = S[row]
            on = np.flatnonzero(srow == 0).tolist()
            ddx, ddy = xs[j] - xs[i], ys[j] - ys[i]
            ts = {k: (xs[k] - xs[i]) * ddx + (ys[k] - ys[i]) * ddy for k in on}
            extra, assign, touching = _best_pattern(on, ts, srow.tolist(), n)
            base = int(totals[row]) - sum(1 for e in touching if generic[row, e])
            yield base + extra, ("pair", i, j), assign
    for i in range(n):
        # upward vertical line; left side is smaller x
        srow = [sign(xs[i] - xs[k]) for k in range(n)]
        on = [k for k in range(n) if srow[k] == 0]
        ts = {k: ys[k] - ys[i] for k in on}
        extra, assign, touching = _best_pattern(on, ts, srow, n)
        base = sum(1 for e in range(n) if e not in touching and srow[e] * srow[(e + 1) % n] < 0)
        yield base + extra, ("vertical", i), assign


def _realize_candidate(P: Polygon, spec, assign) -> Line:
    if spec[0] == "pair":
        _, i, j = spec
        dx, dy = P[j].x - P[i].x, P[j].y - P[i].y
    else:
        _, i = spec
        dx, dy = Fraction(0), Fraction(1)
    base = Line(P[i], Direction.of(dx, dy))
    # canonicalization may have reversed the direction, which mirrors sides
    flip = 1 if (base.dir.dx * dx + base.dir.dy * dy) > 0 else -1
    return realize_signs(base, {k: flip * s for k, s in assign.items()}, P.vertices)


def stabbing_number(P: Polygon) -> StabbingCertificate:
    """Exact maximum number of boundary crossings over all lines.

    Ties go to the first candidate in enumeration order, which is fixed
    (vertex pairs in index order, then verticals), so results are
    deterministic.
    """
    best = None
    for count, spec, pat in _scan(P):
        if best is None or count > best[0]:
            best = (count, spec, pat)
    count, spec, pat = best
    line = _realize_candidate(P, spec, pat)
    check = crossing_count(line, P)
    if check != count:  # pragma: no cover - internal consistency guard
        raise AssertionError(f"witness realizes {check} crossings, expected {count}")
    return StabbingCertificate(count, line)


def max_crossings_through(P: Polygon, i: int, j: int) -> tuple[int, Line]:
    """Best crossing count among lines in the cells around line P_i P_j."""
    best = None
    pts = P.vertices
    base = Line.through(pts[i], pts[j])
    on = [base.param(v) for v in pts if base.side_value(v) == 0]
    for kind, tau, sense in patterns(on):
        line = realize(base, kind, tau, sense, pts)
        c = crossing_count(line, P)
        if best is None or c > best[0]:
            best = (c, line)
    return best


def is_k_convex(P: Polygon, k: int) -> bool:
    if k < 1:
        raise ValueError("k must be positive")
    return stabbing_number(P).value <= 2 * k


def random_lines_crossings(P: Polygon, trials: int, seed: int = 0) -> list[int]:
    """Exact crossing counts of ``trials`` seeded random lines.

    Each line passes through two random rational points of the bounding box
    scaled by two about its center.
    """
    rng = random.Random(seed)
    xs, ys = P.integer_coords
    res = 64  # random points live on a grid 64x finer than the vertices
    minx, maxx, miny, maxy = min(xs), max(xs), min(ys), max(ys)
    wx, wy = max(maxx - minx, 1), max(maxy - miny, 1)
    lox, hix = (2 * minx - wx) * res // 2, (2 * maxx + wx) * res // 2
    loy, hiy = (2 * miny - wy) * res // 2, (2 * maxy + wy) * res // 2
    X, Y = _coord_arrays(P)
    obj = X.dtype == object or max(abs(lox), abs(hix), abs(loy), abs(hiy)) >= _INT64_SAFE
    if obj:
        X, Y = X.astype(object), Y.astype(object)
    X, Y = X * res, Y * res
    n = P.n
    counts = []
    for _ in range(trials):
        px, py = rng.randint(lox, hix), rng.randint(loy, hiy)
        qx, qy = rng.randint(lox, hix), rng.randint(loy, hiy)
        if (px, py) == (qx, qy):
            qx += 1
        dx, dy = qx - px, qy - py
        vals = dx * (Y - py) - dy * (X - px)
        s = np.array([sign(v) for v in vals]) if obj else np.sign(vals)
        if not s.all():
            den = res * P.integer_scale
            line = Line.through((Fraction(px, den), Fraction(py, den)), (Fraction(qx, den), Fraction(qy, den)))
            counts.append(crossing_count(line, P))
        else:
            counts.append(int((s != np.roll(s, -1)).sum()))
    return counts


def stabbing_oracle(P: Polygon, trials: int = 10_000, seed: int = 0) -> int:
    """Randomized lower bound on the stabbing number."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    return max(random_lines_crossings(P, trials, seed))
