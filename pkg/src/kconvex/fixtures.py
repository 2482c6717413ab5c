"""Deterministic polygon generators used as test corpora.

Every generator builds explicit rational coordinates, validates the result
and asserts the property the construction is meant to exhibit; a recipe
that fails its property raises instead of returning a wrong fixture.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Union

from .exactgeom import (
    GeometryError,
    Point,
    Polygon,
    convex_hull,
    in_convex_position,
    validate_polygon,
    vertex_kind,
)


class ParamOutOfRange(ValueError):
    pass


class PropertyAssertionFailed(AssertionError):
    pass


@dataclass(frozen=True)
class FixtureSpec:
    name: str
    params: dict = field(default_factory=dict)
    seed: int = 0


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise PropertyAssertionFailed(msg)


def _check_range(name: str, value, lo, hi=None) -> None:
    if value < lo or (hi is not None and value > hi):
        bound = f">= {lo}" if hi is None else f"in [{lo}, {hi}]"
        raise ParamOutOfRange(f"{name}={value} must be {bound}")


def _stab(P: Polygon) -> int:
    from .stabbing import stabbing_number

    return stabbing_number(P).value


def _two_convex(P: Polygon) -> bool:
    from .twoconvex import recognize_2convex

    return recognize_2convex(P).is_two_convex


def circle_point(theta: float, max_den: int = 10_000) -> Point:
    """A rational point exactly on the unit circle near angle theta."""
    t = Fraction(math.tan(theta / 2)).limit_denominator(max_den)
    d = 1 + t * t
    return Point((1 - t * t) / d, 2 * t / d)


def _circle_points(m: int, phase: float = 0.0) -> list[Point]:
    # angles stay inside (-pi, pi) so tan(theta/2) is finite
    return [circle_point(-math.pi + 2 * math.pi * (i + 0.5 + phase) / m) for i in range(m)]


# -- single polygons --------------------------------------------------------


def convex_ngon(n: int, radius=1) -> Polygon:
    _check_range("n", n, 3)
    r = Fraction(radius)
    P = validate_polygon([(p.x * r, p.y * r) for p in _circle_points(n)])
    _require(in_convex_position(P.vertices) and len(convex_hull(P.vertices)) == n, "ngon not convex")
    return P


def comb(k: int, n: int | None = None, check: bool | None = None) -> Polygon:
    """Spine on the left with k horizontal tapering tines.

    Tine j is centred on y = 3j and spans x in [0, L]; its half-thickness
    shrinks from 1 at the spine to 1/2 at the tip along a parabola, so extra
    vertices (n > 4k + 2) sit on strictly convex arcs. Interior sample
    abscissae are shifted per tine so the tines interleave in x order.
    """
    _check_range("k", k, 1)
    base = 4 * k + 2
    if n is None:
        n = base
    _check_range("n", n, base)
    if n % 2:
        raise ParamOutOfRange("comb vertex count must be even")
    samples = (n - 2) // 2  # x positions over all tines, each used twice
    per = [samples // k + (1 if j < samples % k else 0) for j in range(k)]
    L = Fraction(max(per))
    verts: list[tuple] = [(-1, -1)]
    top = 3 * (k - 1) + 1
    for j in range(k):
        s = per[j]
        off = Fraction(j, 2 * k)
        xs = [Fraction(0)] + [L * (i + off) / (s - 1) for i in range(1, s - 1)] + [L]

        def half(x):
            if s == 2:
                return 1 - x / (2 * L)
            return 1 - x * x / (2 * L * L)

        cy = 3 * j
        verts += [(x, cy - half(x)) for x in xs]
        verts += [(x, cy + half(x)) for x in reversed(xs)]
    verts.append((-1, top))
    P = validate_polygon(verts)
    _require(P.n == n, f"comb has {P.n} vertices, expected {n}")
    if check is None:
        check = n <= 160
    if check:
        _require(_stab(P) == 2 * k, f"comb({k}) stabbing number differs from {2 * k}")
    return P


def _bulge(a: Point, b: Point, m: int, h: Fraction) -> list[tuple]:
    """m points strictly between a and b bent towards the left of a->b."""
    dx, dy = b.x - a.x, b.y - a.y
    out = []
    for i in range(1, m + 1):
        s = Fraction(i, m + 1)
        w = h * s * (1 - s)
        out.append((a.x + s * dx - w * dy, a.y + s * dy + w * dx))
    return out


def pseudo_triangle(a: int = 3, b: int | None = None, c: int | None = None) -> Polygon:
    """Three convex corners joined by inward-bent reflex chains of a, b, c vertices."""
    b = a if b is None else b
    c = a if c is None else c
    for name, v in (("a", a), ("b", b), ("c", c)):
        _check_range(name, v, 0)
    A, B, C = Point.of(0, 0), Point.of(12, 0), Point.of(6, 10)
    h = Fraction(1, 2)
    verts = [A, *_bulge(A, B, a, h), B, *_bulge(B, C, b, h), C, *_bulge(C, A, c, h)]
    P = validate_polygon(verts)
    kinds = [vertex_kind(P, i) for i in range(P.n)]
    _require(kinds.count("convex") == 3, "pseudo-triangle must have exactly 3 convex vertices")
    _require(_stab(P) <= 4, "pseudo-triangle stabbing number exceeds 4")
    return P


def spike_rect(s: int = 2) -> Polygon:
    """Rectangle with s outward spikes on each side (apex convex, base reflex)."""
    _check_range("s", s, 1)
    W = 4 * s + 2
    corners = [Point.of(0, 0), Point.of(W, 0), Point.of(W, W), Point.of(0, W)]
    verts: list[tuple] = []
    height = 2
    for side in range(4):
        A, B = corners[side], corners[(side + 1) % 4]
        ux, uy = (B.x - A.x) / W, (B.y - A.y) / W
        ox, oy = uy, -ux  # outward normal of a counterclockwise side
        verts.append(A)
        for j in range(s):
            c = Fraction(4 * j + 3)
            skew = Fraction(1, 7 + j)
            for t, o in ((c - Fraction(1, 2), 0), (c + skew, height), (c + Fraction(1, 2), 0)):
                verts.append((A.x + t * ux + o * ox, A.y + t * uy + o * oy))
    P = validate_polygon(verts)
    for side in range(4):
        for j in range(s):
            apex = side * (3 * s + 1) + 3 * j + 2
            _require(vertex_kind(P, apex) == "convex", "spike apex must be convex")
            _require(vertex_kind(P, apex - 1) == "reflex", "spike base must be reflex")
            _require(vertex_kind(P, apex + 1) == "reflex", "spike base must be reflex")
    return P


def spiky_star(m: int = 4) -> Polygon:
    """Fan of m spikes hanging below a top vertex; 2m vertices, star-shaped.

    A horizontal line just below the valleys meets every edge, so the
    stabbing number is 2m.
    """
    _check_range("m", m, 2)
    R, r = 3, 1
    top = Point.of(0, 1)
    verts = [top]
    lo, hi = math.radians(210), math.radians(330)
    for i in range(m):
        th = lo + (hi - lo) * i / (m - 1)
        p = circle_point(th)
        verts.append((R * p.x, R * p.y))
        if i < m - 1:
            th2 = lo + (hi - lo) * (i + 0.5) / (m - 1)
            q = circle_point(th2)
            verts.append((r * q.x, r * q.y))
    P = validate_polygon(verts)
    _require(P.n == 2 * m, "spiky star vertex count")
    _require(_stab(P) == 2 * m, f"spiky star stabbing number differs from {2 * m}")
    return P


def many_pockets(n: int = 12) -> Polygon:
    """2-convex polygon with n/2 pockets: shallow notches between hull vertices."""
    _check_range("n", n, 6)
    if n % 2:
        raise ParamOutOfRange("many_pockets needs even n")
    m = n // 2
    hull = _circle_points(m)
    depth = Fraction(1, 8 * m)
    verts = []
    for i in range(m):
        a, b = hull[i], hull[(i + 1) % m]
        verts.append(a)
        verts.append(((a.x + b.x) / 2 * (1 - depth), (a.y + b.y) / 2 * (1 - depth)))
    P = validate_polygon(verts)
    _require(len(convex_hull(P.vertices)) == m, "hull size must be n/2")
    _require(_two_convex(P), "many_pockets must be 2-convex")
    return P


def _pocket_curve(x: Fraction) -> Fraction:
    return x * x * (1 - x) * (1 - x)


def amoeba(k: int = 4, n: int | None = None, depth=None) -> Polygon:
    """k hull vertices with k bell-shaped pockets; n = 2k^2.

    In each pocket a convex foot, a reflex arch of k vertices and a convex
    foot follow a quartic bump, so the boundary splits into 2k convex
    chains of k vertices each.
    """
    _check_range("k", k, 3)
    if n is None:
        n = 2 * k * k
    if n != 2 * k * k:
        raise ParamOutOfRange("amoeba requires n = 2k^2")
    hull = _circle_points(k)
    c = Fraction(2) if depth is None else Fraction(depth)
    n1 = (k + 1) // 2  # convex vertices after the hull vertex
    n3 = k - 1 - n1  # convex vertices before the next hull vertex
    xs = (
        [Fraction(1, 5) * i / n1 for i in range(1, n1 + 1)]
        + [Fraction(1, 4) + Fraction(1, 2) * i / (k - 1) for i in range(k)]
        + [1 - Fraction(1, 5) * i / max(n3, 1) for i in range(n3, 0, -1)]
    )
    verts = []
    for j in range(k):
        a, b = hull[j], hull[(j + 1) % k]
        dx, dy = b.x - a.x, b.y - a.y
        verts.append(a)
        for x in xs:
            w = c * _pocket_curve(x)
            verts.append((a.x + x * dx - w * dy, a.y + x * dy + w * dx))
    P = validate_polygon(verts)
    _require(P.n == n, "amoeba vertex count")
    _require(len(convex_hull(P.vertices)) == k, "amoeba hull size must be k")
    per = 2 * k
    for j in range(k):
        kinds = [vertex_kind(P, j * per + i) for i in range(per)]
        want = ["convex"] * (1 + n1) + ["reflex"] * k + ["convex"] * n3
        _require(kinds == want, f"amoeba pocket {j} has kinds {kinds}")
    _require(_two_convex(P), "amoeba must be 2-convex")
    return P


# -- families ----------------------------------------------------------------


def helly_family(m: int = 3) -> list[Polygon]:
    """m thin strips along a convex m-gon, strip i missing edge i.

    Every proper subfamily meets in the middle of a missing edge; the whole
    family has empty intersection.
    """
    _check_range("m", m, 3)
    Q = helly_polygon(m)
    trim = Fraction(1, 4)
    tau = Fraction(1, 10 * m * m)
    for _ in range(20):
        fam = [_helly_member(Q, i, trim, tau) for i in range(m)]
        if all(_two_convex(P) for P in fam):
            return fam
        tau /= 2
    raise PropertyAssertionFailed("helly family members are not 2-convex")


def helly_polygon(m: int) -> list[Point]:
    """Vertices of the convex m-gon the Helly strips run along."""
    return [Point(p.x * 4, p.y * 4) for p in _circle_points(m)]


def _helly_member(Q: list[Point], i: int, trim: Fraction, tau: Fraction) -> Polygon:
    m = len(Q)
    # edge i joins Q[i] and Q[i+1]; keep the chain Q[i+1] ... Q[i]
    q1, q2 = Q[(i + 1) % m], Q[(i + 2) % m]
    p1, p0 = Q[i % m], Q[(i - 1) % m]
    s = Point(q1.x + trim * (q2.x - q1.x), q1.y + trim * (q2.y - q1.y))
    t = Point(p1.x + trim * (p0.x - p1.x), p1.y + trim * (p0.y - p1.y))
    outer = [s] + [Q[(i + 2 + j) % m] for j in range(m - 2)] + [t]
    inner = [Point(p.x * (1 - tau), p.y * (1 - tau)) for p in reversed(outer)]
    return validate_polygon(outer + inner)


def _dart(ox, oy, da=0) -> list[tuple]:
    return [(ox, oy + da), (ox - 1, oy - 1), (ox, oy + 2), (ox + 1, oy - 1)]


def quad_row(n: int = 4, D: int | None = None) -> list[Polygon]:
    """n darts along a horizontal line with reflex vertices nudged into general position.

    Dart i has reflex vertex a_i = (3i, i^2/D); every line a_i a_j passes
    above the lower corners and below the top corner of every dart.
    """
    _check_range("n", n, 2)
    D = D if D is not None else 16 * n * n
    for _ in range(30):
        fam = [validate_polygon(_dart(3 * i, 0, Fraction(i * i, D))) for i in range(n)]
        if _quad_row_ok(fam):
            return fam
        D *= 2
    raise PropertyAssertionFailed("quad_row perturbation never verified")


def _quad_row_ok(fam: list[Polygon]) -> bool:
    from .exactgeom import Line

    n = len(fam)
    a = [next(v for v in P.vertices if v.x == 3 * i and v.y < 1) for i, P in enumerate(fam)]
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if (a[j].x - a[i].x) * (a[k].y - a[i].y) == (a[j].y - a[i].y) * (a[k].x - a[i].x):
                    return False
    for i in range(n):
        for j in range(i + 1, n):
            L = Line.through(a[i], a[j])
            for k, P in enumerate(fam):
                for v in P.vertices:
                    if v == a[k]:
                        continue
                    want = 1 if v.y > 1 else -1
                    if L.side(v) * (1 if L.dir.dx > 0 else -1) != want:
                        return False
    return True


def _up_comb(intervals: list[tuple], base_lo, base_hi, tops) -> Polygon:
    """Comb with vertical tines over x-intervals rising from a spine [base_lo, base_hi] in y."""
    x0 = min(a for a, _ in intervals)
    x1 = max(b for _, b in intervals)
    verts = [(x0, base_lo), (x1, base_lo)]
    for (a, b), top in reversed(list(zip(intervals, tops))):
        if b != x1:
            verts.append((b, base_hi))
        verts.append((b, top))
        verts.append((a, top))
        if a != x0:
            verts.append((a, base_hi))
    return validate_polygon(_drop_collinear(verts))


def _down_comb(intervals, base_lo, base_hi, bottoms) -> Polygon:
    flipped = _up_comb(intervals, -base_hi, -base_lo, [-b for b in bottoms])
    return validate_polygon([(v.x, -v.y) for v in flipped.vertices])


def _drop_collinear(verts):
    pts = [Point.of(*v) for v in verts]
    out = []
    n = len(pts)
    for i, p in enumerate(pts):
        a, b = pts[i - 1], pts[(i + 1) % n]
        if (p.x - a.x) * (b.y - a.y) != (p.y - a.y) * (b.x - a.x):
            out.append(p)
    return out


def interlock_combs(k: int = 2, m: int = 2, variant: str = "intersect") -> list[Polygon]:
    """Comb families realizing the union and intersection degree bounds.

    variant "union": disjoint combs with k and m tines, all tines cut by
    the line y = 1 (degree k + m).
    variant "intersect": an upward k-tine comb and a downward m-tine comb
    whose tine intervals alternate and overlap on y = 1 (degree k + m - 1);
    requires |k - m| <= 1.
    variant "family": m upward combs with k tines over a common span, each
    with its own k - 1 gaps (degree m(k - 1) + 1 for their intersection).
    """
    _check_range("k", k, 1)
    _check_range("m", m, 1)
    if variant == "union":
        left = [(Fraction(4 * i), Fraction(4 * i + 2)) for i in range(k)]
        off = 4 * k + 3
        right = [(Fraction(off + 4 * i), Fraction(off + 4 * i + 2)) for i in range(m)]
        return [
            _up_comb(left, -2, 0, [Fraction(2 + i, 1) for i in range(k)]),
            _up_comb(right, -2, 0, [Fraction(2 + i, 1) + Fraction(1, 3) for i in range(m)]),
        ]
    if variant == "intersect":
        if abs(k - m) > 1:
            raise ParamOutOfRange("intersect variant needs |k - m| <= 1")
        first_up = k >= m
        total = k + m
        ups, downs = [], []
        for t in range(total):
            iv = (Fraction(3 * t), Fraction(3 * t + 4))
            (ups if (t % 2 == 0) == first_up else downs).append(iv)
        _require(len(ups) == k and len(downs) == m, "interlock tine bookkeeping")
        return [
            _up_comb(ups, -2, 0, [Fraction(3) + Fraction(i, 5) for i in range(k)]),
            _down_comb(downs, 2, 4, [Fraction(-1) - Fraction(i, 7) for i in range(m)]),
        ]
    if variant == "family":
        if k < 2:
            raise ParamOutOfRange("family variant needs k >= 2")
        span = 2 * (m * (k - 1) + 1)
        fam = []
        for c in range(m):
            gaps = [2 * (j * m + c) + 1 for j in range(k - 1)]
            cuts = [Fraction(0)]
            for g in gaps:
                cuts += [Fraction(g), Fraction(g + 1)]
            cuts.append(Fraction(span))
            ivs = [(cuts[2 * i], cuts[2 * i + 1]) for i in range(k)]
            tops = [Fraction(2) + Fraction(c, m + 1) + Fraction(i, 9) for i in range(k)]
            fam.append(_up_comb(ivs, Fraction(-2) - c, Fraction(0), tops))
        return fam
    raise ParamOutOfRange(f"unknown interlock variant {variant!r}")


# -- random polygons ------------------------------------------------------------


def _chain(a: Point, b: Point, pts: list[Point], rng: random.Random) -> list[Point]:
    """Non-crossing path a -> b through pts, all on one side of ab (space partitioning)."""
    if not pts:
        return [a, b]
    c = pts[rng.randrange(len(pts))]
    s = Fraction(rng.randint(1, 999), 1000)
    r = Point(a.x + s * (b.x - a.x), a.y + s * (b.y - a.y))
    da, db = [], []
    for p in pts:
        if p == c:
            continue
        side = (r.x - c.x) * (p.y - c.y) - (r.y - c.y) * (p.x - c.x)
        side_a = (r.x - c.x) * (a.y - c.y) - (r.y - c.y) * (a.x - c.x)
        (da if side * side_a > 0 else db).append(p)
    return _chain(a, c, da, rng)[:-1] + _chain(c, b, db, rng)


def random_simple_polygon(n: int, seed: int = 0) -> Polygon:
    """Simple polygon on n random rational points by recursive space partitioning."""
    _check_range("n", n, 3)
    rng = random.Random(seed)
    while True:
        pts = list({Point(Fraction(rng.randint(0, 10**5), 100), Fraction(rng.randint(0, 10**5), 100)) for _ in range(n)})
        if len(pts) < n:
            continue
        pts.sort()
        rng.shuffle(pts)
        a, b = pts[0], pts[1]
        left, right = [], []
        for p in pts[2:]:
            s = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)
            (left if s > 0 else right).append(p)
        upper = _chain(a, b, right, rng)
        lower = _chain(b, a, left, rng)
        try:
            return validate_polygon(upper[:-1] + lower[:-1])
        except GeometryError:
            continue


# -- registry -----------------------------------------------------------------

GENERATORS: dict[str, Callable[..., Union[Polygon, list[Polygon]]]] = {
    "convex_ngon": convex_ngon,
    "comb": comb,
    "pseudo_triangle": pseudo_triangle,
    "spike_rect": spike_rect,
    "spiky_star": spiky_star,
    "many_pockets": many_pockets,
    "amoeba": amoeba,
    "helly_family": helly_family,
    "quad_row": quad_row,
    "interlock_combs": interlock_combs,
    "random_simple_polygon": random_simple_polygon,
}


def generate(spec: FixtureSpec) -> Union[Polygon, list[Polygon]]:
    try:
        gen = GENERATORS[spec.name]
    except KeyError:
        raise ParamOutOfRange(f"unknown fixture {spec.name!r}") from None
    params = dict(spec.params)
    if spec.name == "random_simple_polygon":
        params.setdefault("seed", spec.seed)
    return gen(**params)


def standard_corpus(random_count: int = 140, max_n: int = 60) -> list[tuple[str, Polygon]]:
    """Every fixture at three sizes (family members individually) plus random polygons."""
    out: list[tuple[str, Polygon]] = []
    singles = [
        ("convex_ngon", "n", (3, 8, 20)),
        ("comb", "k", (1, 3, 5)),
        ("pseudo_triangle", "a", (1, 3, 7)),
        ("spike_rect", "s", (1, 2, 3)),
        ("spiky_star", "m", (3, 4, 6)),
        ("many_pockets", "n", (8, 12, 20)),
        ("amoeba", "k", (3, 4, 5)),
    ]
    for name, key, sizes in singles:
        for v in sizes:
            out.append((f"{name}({key}={v})", GENERATORS[name](**{key: v})))
    families = [("helly_family", {"m": m}) for m in (3, 5, 7)]
    families += [("quad_row", {"n": n}) for n in (3, 4, 5)]
    families += [
        ("interlock_combs", {"k": k, "m": m, "variant": var})
        for var in ("union", "intersect", "family")
        for k, m in ((2, 2), (2, 3), (3, 2))
    ]
    for name, params in families:
        tag = ",".join(f"{k}={v}" for k, v in params.items())
        for i, P in enumerate(GENERATORS[name](**params)):
            out.append((f"{name}({tag})[{i}]", P))
    for i in range(random_count):
        n = 4 + i % (max_n - 3)
        out.append((f"random(n={n},seed={i})", random_simple_polygon(n, seed=i)))
    return out
