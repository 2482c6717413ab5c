"""Recognition of 2-convex polygons through their local characterization.

A polygon is 2-convex unless (a) an edge extension ray at a reflex vertex
leaves and re-enters the polygon, (b) some line is tangent at two reflex
vertices with the polygon locally on opposite sides (an inner tangent), or
(c) the supporting line of an edge joining a convex and a reflex vertex
crosses the rest of the boundary at least three times. Any failing check is
confirmed against an exact crossing count before it is reported.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Union

from sortedcontainers import SortedList

from .exactgeom import (
    Direction,
    GeometryError,
    Line,
    Point,
    Polygon,
    Ray,
    orient_value,
    sign,
    vertex_kind,
)
from .stabbing import line_profile, max_crossings_through, stabbing_number


class DegenerateOverlap(GeometryError):
    """An extension ray contains a whole edge of the polygon."""


@dataclass(frozen=True, order=True)
class BoundaryPos:
    edge_index: int
    t: Fraction = Fraction(0)

    def to_json(self) -> list:
        return [self.edge_index, str(self.t)]


@dataclass(frozen=True)
class BoundaryArc:
    """Counterclockwise stretch of the boundary from ``start`` to ``end``."""

    start: BoundaryPos
    end: BoundaryPos

    def contains(self, pos: BoundaryPos) -> bool:
        if self.start <= self.end:
            return self.start <= pos <= self.end
        return pos >= self.start or pos <= self.end

    def to_json(self) -> dict:
        return {"start": self.start.to_json(), "end": self.end.to_json()}


class RayHit(NamedTuple):
    pos: BoundaryPos
    point: Point


@dataclass(frozen=True)
class CriticalRange:
    """Boundary positions x for which the line through ``vertex`` and x is
    tangent there; ``intervals`` lists the member vertices as inclusive,
    non-wrapping index ranges."""

    vertex: int
    arcs: tuple[BoundaryArc, BoundaryArc]
    intervals: tuple[tuple[int, int], ...]

    def contains_vertex(self, i: int) -> bool:
        return any(a <= i <= b for a, b in self.intervals)

    def to_json(self) -> dict:
        return {
            "vertex": self.vertex,
            "arcs": [a.to_json() for a in self.arcs],
            "vertex_intervals": [list(iv) for iv in self.intervals],
        }


@dataclass(frozen=True)
class MultiHitRay:
    vertex: int
    ray: Ray
    hits: tuple[Point, ...]

    def to_json(self) -> dict:
        return {
            "type": "multi_hit_ray",
            "vertex": self.vertex,
            "ray": {"origin": [str(c) for c in self.ray.origin], "dir": [str(self.ray.dir.dx), str(self.ray.dir.dy)]},
            "hits": [[str(c) for c in p] for p in self.hits],
        }


@dataclass(frozen=True)
class InnerTangent:
    v: int
    v2: int

    def to_json(self) -> dict:
        return {"type": "inner_tangent", "vertices": [self.v, self.v2]}


@dataclass(frozen=True)
class InflectionStabber:
    edge_index: int
    line: Line

    def to_json(self) -> dict:
        return {"type": "inflection_stabber", "edge": self.edge_index, "line": self.line.to_json()}


Witness = Union[MultiHitRay, InnerTangent, InflectionStabber]


@dataclass(frozen=True)
class TwoConvexVerdict:
    is_two_convex: bool
    witness: Optional[Witness] = None
    used_oracle: bool = False

    def to_json(self) -> dict:
        return {
            "is_two_convex": self.is_two_convex,
            "witness": None if self.witness is None else self.witness.to_json(),
            "used_oracle": self.used_oracle,
        }


def reflex_vertices(P: Polygon) -> list[int]:
    return [i for i in range(P.n) if vertex_kind(P, i) == "reflex"]


def _pos_of(P: Polygon, e: int, p: Point) -> BoundaryPos:
    a, b = P[e], P[e + 1]
    if a.x != b.x:
        t = (p.x - a.x) / (b.x - a.x)
    else:
        t = (p.y - a.y) / (b.y - a.y)
    if t == 1:
        return BoundaryPos((e + 1) % P.n, Fraction(0))
    return BoundaryPos(e, t)


def extension_ray(P: Polygon, v: int, which: int) -> Ray:
    """Ray at v prolonging the incoming edge (which=0) or the outgoing edge (which=1)."""
    src = P[v - 1] if which == 0 else P[v + 1]
    d = Direction.of(P[v].x - src.x, P[v].y - src.y, oriented=True)
    return Ray(P[v], d)


def ray_hits(r: Ray, P: Polygon) -> list[RayHit]:
    """Intersections of the open ray with the boundary, nearest first."""
    L = Line(r.origin, r.dir)
    t0 = L.param(r.origin)
    sides = [L.side(v) for v in P.vertices]
    n = P.n
    found: dict[BoundaryPos, tuple[Fraction, Point]] = {}
    for e in range(n):
        a, b = P[e], P[e + 1]
        sa, sb = sides[e], sides[(e + 1) % n]
        if sa == 0 and sb == 0:
            if L.param(a) > t0 or L.param(b) > t0:
                raise DegenerateOverlap(f"ray contains edge {e}")
            continue
        if sa == 0:
            p = a
        elif sb == 0:
            p = b
        elif sa != sb:
            ga, gb = L.side_value(a), L.side_value(b)
            lam = Fraction(ga) / (ga - gb)
            p = Point(a.x + lam * (b.x - a.x), a.y + lam * (b.y - a.y))
        else:
            continue
        t = L.param(p)
        if t > t0:
            e_of = e if p != b else (e + 1) % n
            found[_pos_of(P, e_of, p)] = (t, p)
    return [RayHit(pos, p) for pos, (t, p) in sorted(found.items(), key=lambda kv: kv[1][0])]


def _perturbed_hits(P: Polygon, v: int, which: int):
    """Generic-position version of the extension-ray hits.

    The ray is shifted infinitesimally towards the other neighbour of v, so
    every boundary point on it takes a definite side. Returns the hit list
    (parameter order) and whether any degeneracy was resolved this way.
    """
    n = P.n
    r = extension_ray(P, v, which)
    L = Line(r.origin, r.dir)
    other = P[v + 1] if which == 0 else P[v - 1]
    shift = -L.side(other)
    degenerate = False
    sides = []
    for k in range(n):
        s = L.side(P[k])
        if s == 0:
            if k not in (v, (v - 1) % n, (v + 1) % n):
                degenerate = True
            s = shift
        sides.append(s)
    t0 = L.param(P[v])
    hits = []
    for e in range(n):
        if e == v or e == (v - 1) % n:
            continue
        a, b = P[e], P[e + 1]
        if sides[e] == sides[(e + 1) % n]:
            continue
        ga, gb = L.side_value(a), L.side_value(b)
        if ga == 0:
            p = a
        elif gb == 0:
            p = b
        else:
            lam = Fraction(ga) / (ga - gb)
            p = Point(a.x + lam * (b.x - a.x), a.y + lam * (b.y - a.y))
        t = L.param(p)
        if t > t0:
            hits.append((t, e, p))
        elif t == t0:  # pragma: no cover - simple polygons never return to v
            degenerate = True
    hits.sort(key=lambda h: h[0])
    return r, [(e, p) for _, e, p in hits], degenerate


def _tangent_at(P: Polygon, v: int, x) -> bool:
    """Whether the line through P[v] and x leaves both neighbours of v on one closed side."""
    a = sign(orient_value(P[v], x, P[v - 1]))
    b = sign(orient_value(P[v], x, P[v + 1]))
    return a * b >= 0


def _range_from_hits(P: Polygon, v: int, h1: BoundaryPos, h2: BoundaryPos) -> CriticalRange:
    n = P.n
    vpos = BoundaryPos(v, Fraction(0))
    arcs = (BoundaryArc(vpos, h1), BoundaryArc(h2, vpos))
    members = []
    excluded = {v, (v - 1) % n, (v + 1) % n}
    for i in range(n):
        if i in excluded:
            continue
        pos = BoundaryPos(i, Fraction(0))
        if (arcs[0].contains(pos) or arcs[1].contains(pos)) and _tangent_at(P, v, P[i]):
            members.append(i)
    intervals = []
    for i in members:
        if intervals and intervals[-1][1] == i - 1:
            intervals[-1][1] = i
        else:
            intervals.append([i, i])
    return CriticalRange(v, arcs, tuple(tuple(iv) for iv in intervals))


def critical_range(P: Polygon, v: int) -> CriticalRange:
    """Critical range of reflex vertex v.

    Requires each extension ray at v to hit the boundary exactly once.
    """
    hs = []
    for which in (0, 1):
        _, hits, _ = _perturbed_hits(P, v, which)
        if len(hits) != 1:
            raise ValueError(f"extension ray {which} at vertex {v} has {len(hits)} hits")
        e, p = hits[0]
        hs.append(_pos_of(P, e, p))
    return _range_from_hits(P, v, hs[0], hs[1])


def _critical_ranges(P: Polygon, reflex: list[int]) -> dict[int, CriticalRange]:
    return {v: critical_range(P, v) for v in reflex}


def find_inner_tangent(P: Polygon, ranges: Optional[dict] = None) -> Optional[tuple[int, int]]:
    """Reflex pair (v, v') with each in the other's critical range, by a sliding scan.

    The scan walks the vertices in boundary order keeping the reflex
    vertices whose range covers the current vertex in a sorted list; at a
    reflex vertex it asks whether any of them lies in its own range.
    """
    if ranges is None:
        ranges = _critical_ranges(P, reflex_vertices(P))
    opens: dict[int, list[int]] = {}
    closes: dict[int, list[int]] = {}
    for w, cr in ranges.items():
        for a, b in cr.intervals:
            opens.setdefault(a, []).append(w)
            closes.setdefault(b, []).append(w)
    active = SortedList()
    for x in range(P.n):
        for w in opens.get(x, ()):
            active.add(w)
        if x in ranges:
            for a, b in ranges[x].intervals:
                lo = active.bisect_left(a)
                if lo < len(active) and active[lo] <= b:
                    return (x, active[lo])
        for w in closes.get(x, ()):
            active.remove(w)
    return None


def inner_tangent_pairs(P: Polygon, ranges: Optional[dict] = None) -> list[tuple[int, int]]:
    """All mutually contained reflex pairs, checked directly."""
    if ranges is None:
        ranges = _critical_ranges(P, reflex_vertices(P))
    vs = sorted(ranges)
    return [
        (a, b)
        for i, a in enumerate(vs)
        for b in vs[i + 1:]
        if ranges[a].contains_vertex(b) and ranges[b].contains_vertex(a)
    ]


def inflection_edges(P: Polygon) -> list[int]:
    kinds = [vertex_kind(P, i) for i in range(P.n)]
    return [i for i in range(P.n) if kinds[i] != kinds[(i + 1) % P.n]]


def inflection_stabber_exists(P: Polygon) -> Optional[tuple[int, Line]]:
    """First inflection edge whose supporting line crosses the rest of the boundary 3+ times."""
    for e in inflection_edges(P):
        L = Line.through(P[e], P[e + 1])
        prof = line_profile(L, P)
        count = prof.crossing_count
        for ev in prof.events:
            if getattr(ev, "vertices", None) and e in ev.vertices and ev.crossing:
                count -= 1
        if count >= 3:
            return e, L
    return None


def _confirmed(P: Polygon, i: int, j: int) -> bool:
    return max_crossings_through(P, i, j)[0] >= 6


def _oracle_verdict(P: Polygon) -> TwoConvexVerdict:
    return TwoConvexVerdict(stabbing_number(P).value <= 4, None, used_oracle=True)


def recognize_2convex(P: Polygon, oracle: bool = False) -> TwoConvexVerdict:
    """Decide 2-convexity, returning the first witness found.

    Checks run in the order multi-hit ray, inner tangent, inflection
    stabber. Negative verdicts are confirmed by an exact crossing count
    near the witness line. If a witness cannot be confirmed, or an
    accepting run met a degenerate ray, the exact stabbing number decides.
    """
    if oracle:
        return _oracle_verdict(P)
    reflex = reflex_vertices(P)
    if not reflex:
        return TwoConvexVerdict(True)
    degenerate = False
    hits_at: dict[int, list[BoundaryPos]] = {}
    for v in reflex:
        for which in (0, 1):
            ray, hits, deg = _perturbed_hits(P, v, which)
            degenerate |= deg
            if len(hits) > 1:
                nb = v - 1 if which == 0 else v + 1
                if _confirmed(P, v, nb % P.n):
                    return TwoConvexVerdict(False, MultiHitRay(v, ray, tuple(p for _, p in hits)))
                return _oracle_verdict(P)
            hits_at.setdefault(v, []).append(_pos_of(P, *hits[0]))
    ranges = {v: _range_from_hits(P, v, *hits_at[v]) for v in reflex}
    pair = find_inner_tangent(P, ranges)
    if pair is not None:
        if _confirmed(P, *pair):
            return TwoConvexVerdict(False, InnerTangent(*sorted(pair)))
        return _oracle_verdict(P)
    found = inflection_stabber_exists(P)
    if found is not None:
        e, L = found
        if _confirmed(P, e, (e + 1) % P.n):
            return TwoConvexVerdict(False, InflectionStabber(e, L))
        return _oracle_verdict(P)
    if degenerate:
        return _oracle_verdict(P)
    return TwoConvexVerdict(True)
