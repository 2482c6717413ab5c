"""Exact rational geometry kernel.

Every coordinate is a :class:`fractions.Fraction`; all predicates are
evaluated without rounding. Floating point only shows up in rendering.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

LEFT, COLLINEAR, RIGHT = "left", "collinear", "right"
CONVEX, REFLEX = "convex", "reflex"
INSIDE, BOUNDARY, OUTSIDE = "inside", "boundary", "outside"


class GeometryError(ValueError):
    """Base class for invalid geometric input."""


class TooFewVertices(GeometryError):
    pass


class DuplicateVertex(GeometryError):
    def __init__(self, i: int, j: int):
        super().__init__(f"vertices {i} and {j} coincide")
        self.indices = (i, j)


class CollinearRun(GeometryError):
    def __init__(self, i: int, j: int, k: int):
        super().__init__(f"consecutive vertices {i}, {j}, {k} are collinear")
        self.indices = (i, j, k)


class SelfIntersection(GeometryError):
    def __init__(self, e: int, f: int):
        super().__init__(f"edges {e} and {f} intersect")
        self.indices = (e, f)


class DegenerateInput(GeometryError):
    pass


def Q(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact coordinates")
    return Fraction(value)


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x, y) -> "Point":
        return cls(Q(x), Q(y))

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


def cross(ax, ay, bx, by):
    return ax * by - ay * bx


def orient_value(p, q, r):
    """Twice the signed area of triangle pqr (exact)."""
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def sign(v) -> int:
    return (v > 0) - (v < 0)


def orientation(p, q, r) -> str:
    s = sign(orient_value(p, q, r))
    return LEFT if s > 0 else RIGHT if s < 0 else COLLINEAR


def _lcm(values: Iterable[int]) -> int:
    out = 1
    for v in values:
        out = out * v // math.gcd(out, v)
    return out


@dataclass(frozen=True)
class Direction:
    """A direction in lowest integer terms.

    ``of`` canonicalizes the sign (first nonzero coordinate positive) unless
    ``oriented`` is set, as needed for rays.
    """

    dx: int
    dy: int

    @classmethod
    def of(cls, dx, dy, oriented: bool = False) -> "Direction":
        dx, dy = Q(dx), Q(dy)
        if dx == 0 and dy == 0:
            raise GeometryError("zero direction")
        den = _lcm((dx.denominator, dy.denominator))
        ix, iy = int(dx * den), int(dy * den)
        g = math.gcd(ix, iy)
        ix, iy = ix // g, iy // g
        if not oriented and (ix < 0 or (ix == 0 and iy < 0)):
            ix, iy = -ix, -iy
        return cls(ix, iy)

    def __iter__(self):
        yield self.dx
        yield self.dy


@dataclass(frozen=True)
class Line:
    """Points ``anchor + t * dir``; the parameter t orders points along the line."""

    anchor: Point
    dir: Direction

    @classmethod
    def through(cls, p, q) -> "Line":
        p, q = Point.of(*p), Point.of(*q)
        return cls(p, Direction.of(q.x - p.x, q.y - p.y))

    @classmethod
    def from_equation(cls, a, b, c) -> "Line":
        """The line ``a*x + b*y = c``."""
        a, b, c = Q(a), Q(b), Q(c)
        if a == 0 and b == 0:
            raise GeometryError("degenerate line equation")
        if b != 0:
            anchor = Point(Fraction(0), c / b)
        else:
            anchor = Point(c / a, Fraction(0))
        return cls(anchor, Direction.of(b, -a))

    def point_at(self, t) -> Point:
        return Point(self.anchor.x + t * self.dir.dx, self.anchor.y + t * self.dir.dy)

    def param(self, p) -> Fraction:
        """Parameter of the orthogonal projection of p onto the line."""
        dx, dy = self.dir.dx, self.dir.dy
        return Fraction((p[0] - self.anchor.x) * dx + (p[1] - self.anchor.y) * dy, dx * dx + dy * dy)

    def side_value(self, p):
        """Positive left of the line (w.r.t. dir), zero on it."""
        return self.dir.dx * (p[1] - self.anchor.y) - self.dir.dy * (p[0] - self.anchor.x)

    def side(self, p) -> int:
        return sign(self.side_value(p))

    def canonical_key(self) -> tuple:
        """Key identifying the point set of the line (used for tie-breaks)."""
        dx, dy = self.dir.dx, self.dir.dy
        c = dx * self.anchor.y - dy * self.anchor.x
        return (dx, dy, c)

    def to_json(self) -> dict:
        return {
            "anchor": [str(self.anchor.x), str(self.anchor.y)],
            "dir": [str(self.dir.dx), str(self.dir.dy)],
        }


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point

    def __post_init__(self):
        if self.a == self.b:
            raise GeometryError("degenerate segment")


@dataclass(frozen=True)
class Ray:
    origin: Point
    dir: Direction


def on_segment(p, a, b) -> bool:
    """p lies on the closed segment ab."""
    if orient_value(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def segments_intersect(a, b, c, d) -> bool:
    """Closed segments ab and cd share at least one point."""
    o1, o2 = sign(orient_value(a, b, c)), sign(orient_value(a, b, d))
    o3, o4 = sign(orient_value(c, d, a)), sign(orient_value(c, d, b))
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return (
        (o1 == 0 and on_segment(c, a, b))
        or (o2 == 0 and on_segment(d, a, b))
        or (o3 == 0 and on_segment(a, c, d))
        or (o4 == 0 and on_segment(b, c, d))
    )


def segments_cross(a, b, c, d) -> bool:
    """Proper crossing: a single point interior to both segments."""
    o1, o2 = sign(orient_value(a, b, c)), sign(orient_value(a, b, d))
    o3, o4 = sign(orient_value(c, d, a)), sign(orient_value(c, d, b))
    return o1 * o2 < 0 and o3 * o4 < 0


def segment_intersection_point(a, b, c, d):
    """Intersection of non-parallel supporting lines of ab and cd."""
    r = (b[0] - a[0], b[1] - a[1])
    s = (d[0] - c[0], d[1] - c[1])
    den = cross(*r, *s)
    if den == 0:
        return None
    t = Fraction(cross(c[0] - a[0], c[1] - a[1], *s), 1) / den
    return Point(a[0] + t * r[0], a[1] + t * r[1])


def signed_area2(pts: Sequence) -> Fraction:
    n = len(pts)
    return sum(
        (pts[i][0] * pts[(i + 1) % n][1] - pts[(i + 1) % n][0] * pts[i][1] for i in range(n)),
        Fraction(0),
    )


@dataclass(frozen=True, eq=False)
class Polygon:
    """A validated simple polygon with counterclockwise vertices.

    Build through :func:`validate_polygon`; the constructor does not check.
    """

    vertices: tuple[Point, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def __getitem__(self, i: int) -> Point:
        return self.vertices[i % len(self.vertices)]

    def __eq__(self, other) -> bool:
        return isinstance(other, Polygon) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def edges(self):
        n = len(self.vertices)
        for i in range(n):
            yield i, self.vertices[i], self.vertices[(i + 1) % n]

    def area(self) -> Fraction:
        return signed_area2(self.vertices) / 2

    @cached_property
    def integer_scale(self) -> int:
        return _lcm(c.denominator for v in self.vertices for c in v)

    @cached_property
    def integer_coords(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Vertex coordinates multiplied by :attr:`integer_scale`.

        Orientation signs, crossing counts and stabbing numbers are invariant
        under this scaling, so hot loops run on plain ints.
        """
        den = self.integer_scale
        xs = tuple(int(v.x * den) for v in self.vertices)
        ys = tuple(int(v.y * den) for v in self.vertices)
        return xs, ys

    def bbox(self):
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def to_json(self) -> dict:
        return {"vertices": [[str(v.x), str(v.y)] for v in self.vertices]}


def validate_polygon(vertices: Iterable) -> Polygon:
    """Check simplicity and normalize to counterclockwise order.

    Raises one of TooFewVertices, DuplicateVertex, CollinearRun,
    SelfIntersection; indices refer to the input order.
    """
    pts = [v if isinstance(v, Point) else Point.of(*v) for v in vertices]
    n = len(pts)
    if n < 3:
        raise TooFewVertices(f"need at least 3 vertices, got {n}")
    seen: dict[Point, int] = {}
    for i, p in enumerate(pts):
        if p in seen:
            raise DuplicateVertex(seen[p], i)
        seen[p] = i
    for i in range(n):
        a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
        if orient_value(a, b, c) == 0:
            raise CollinearRun((i - 1) % n, i, (i + 1) % n)
    # all-pairs edge test; adjacent edges may only share their common vertex
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        for j in range(i + 1, n):
            c, d = pts[j], pts[(j + 1) % n]
            if j == i + 1 or (i == 0 and j == n - 1):
                # adjacent: collinear overlap is the only failure mode, and
                # consecutive collinear triples were rejected above
                continue
            if segments_intersect(a, b, c, d):
                raise SelfIntersection(i, j)
    if signed_area2(pts) < 0:
        pts.reverse()
    return Polygon(tuple(pts))


def polygon_from_coords(coords: Iterable) -> Polygon:
    return validate_polygon(Point.of(x, y) for x, y in coords)


def convex_hull(points: Sequence) -> list[int]:
    """Indices of the extreme points in counterclockwise order (monotone chain)."""
    pts = [p if isinstance(p, Point) else Point.of(*p) for p in points]
    if len(pts) < 3:
        raise DegenerateInput("hull needs at least 3 points")
    order = sorted(range(len(pts)), key=lambda i: (pts[i].x, pts[i].y))
    # drop exact duplicates, keeping the first index
    uniq: list[int] = []
    for i in order:
        if not uniq or pts[uniq[-1]] != pts[i]:
            uniq.append(i)

    def half(seq):
        chain: list[int] = []
        for i in seq:
            while len(chain) >= 2 and orient_value(pts[chain[-2]], pts[chain[-1]], pts[i]) <= 0:
                chain.pop()
            chain.append(i)
        return chain

    lower = half(uniq)
    upper = half(reversed(uniq))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateInput("all points are collinear")
    return hull


def in_convex_position(points: Sequence) -> bool:
    """True when every point is a strict vertex of the hull of the set."""
    if len(points) <= 3:
        if len(points) == 3:
            return orient_value(*points) != 0
        return len(set(points)) == len(points)
    try:
        return len(convex_hull(points)) == len(points)
    except DegenerateInput:
        return False


def point_in_polygon(p, P: Polygon) -> str:
    """Classify p as inside, on the boundary of, or outside P."""
    p = p if isinstance(p, Point) else Point.of(*p)
    for _, a, b in P.edges():
        if on_segment(p, a, b):
            return BOUNDARY
    inside = False
    for _, a, b in P.edges():
        # half-open rule on y avoids double counting at vertices
        if (a.y > p.y) != (b.y > p.y):
            o = orient_value(a, b, p)
            if (o > 0) == (b.y > a.y):
                inside = not inside
    return INSIDE if inside else OUTSIDE


def winding_number(p, P: Polygon) -> int:
    w = 0
    for _, a, b in P.edges():
        if a.y <= p[1]:
            if b.y > p[1] and orient_value(a, b, p) > 0:
                w += 1
        elif b.y <= p[1] and orient_value(a, b, p) < 0:
            w -= 1
    return w


def vertex_kind(P: Polygon, i: int) -> str:
    o = orient_value(P[i - 1], P[i], P[i + 1])
    return CONVEX if o > 0 else REFLEX


def is_convex(P: Polygon) -> bool:
    return all(vertex_kind(P, i) == CONVEX for i in range(P.n))


def parse_coord(value) -> Fraction:
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise GeometryError(f"coordinate must be an integer or 'p/q' string, got {value!r}")


def polygon_from_json(obj) -> Polygon:
    try:
        verts = obj["vertices"]
    except (KeyError, TypeError):
        raise GeometryError("polygon JSON needs a 'vertices' list") from None
    return validate_polygon(Point(parse_coord(x), parse_coord(y)) for x, y in verts)
