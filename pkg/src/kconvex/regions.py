"""Unions and intersections of polygons, measured one line at a time.

A region is an expression tree over named polygons. Nothing is ever
materialized as a polygon: along a line each leaf is a set of closed
parameter intervals and the tree is evaluated with interval algebra. The
degree of convexity of a region is the largest number of components over
all lines; it is computed exactly from the cells of the dual arrangement of
the leaf vertices and the pairwise edge crossings.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .exactgeom import (
    Line,
    Point,
    Polygon,
    point_in_polygon,
    polygon_from_json,
    segment_intersection_point,
    segments_intersect,
)
from .perturb import candidate_lines
from .stabbing import line_profile
from .twoconvex import recognize_2convex


class UnboundId(KeyError):
    pass


Interval = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class IntervalSet:
    """Disjoint closed intervals sorted by start; touching intervals are merged."""

    intervals: tuple[Interval, ...] = ()

    @classmethod
    def of(cls, intervals) -> "IntervalSet":
        ivs = sorted((Fraction(a), Fraction(b)) for a, b in intervals)
        out: list[list[Fraction]] = []
        for a, b in ivs:
            if a > b:
                raise ValueError(f"empty interval [{a}, {b}]")
            if out and a <= out[-1][1]:
                out[-1][1] = max(out[-1][1], b)
            else:
                out.append([a, b])
        return cls(tuple((a, b) for a, b in out))

    def __len__(self) -> int:
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def __or__(self, other: "IntervalSet") -> "IntervalSet":
        return IntervalSet.of(self.intervals + other.intervals)

    def __and__(self, other: "IntervalSet") -> "IntervalSet":
        out = []
        i = j = 0
        A, B = self.intervals, other.intervals
        while i < len(A) and j < len(B):
            lo = max(A[i][0], B[j][0])
            hi = min(A[i][1], B[j][1])
            if lo <= hi:
                out.append((lo, hi))
            if A[i][1] < B[j][1]:
                i += 1
            else:
                j += 1
        return IntervalSet.of(out)

    def contains(self, t) -> bool:
        return any(a <= t <= b for a, b in self.intervals)


# -- expression trees ------------------------------------------------------


@dataclass(frozen=True)
class Leaf:
    id: str


@dataclass(frozen=True)
class Union:
    children: tuple


@dataclass(frozen=True)
class Intersect:
    children: tuple


Node = Leaf | Union | Intersect


@dataclass
class RegionExpr:
    tree: Node
    env: dict[str, Polygon] = field(default_factory=dict)

    def __post_init__(self):
        missing = sorted(set(leaf_ids(self.tree)) - set(self.env))
        if missing:
            raise UnboundId(missing[0])

    def polygons(self) -> list[Polygon]:
        return [self.env[i] for i in dict.fromkeys(leaf_ids(self.tree))]


def leaf_ids(node: Node) -> list[str]:
    if isinstance(node, Leaf):
        return [node.id]
    if not node.children:
        raise ValueError("empty union/intersection")
    return [i for c in node.children for i in leaf_ids(c)]


def union(*polys: Polygon) -> RegionExpr:
    env = {f"Q{i}": P for i, P in enumerate(polys)}
    return RegionExpr(Union(tuple(Leaf(k) for k in env)), env)


def intersect(*polys: Polygon) -> RegionExpr:
    env = {f"Q{i}": P for i, P in enumerate(polys)}
    return RegionExpr(Intersect(tuple(Leaf(k) for k in env)), env)


def parse_tree(obj) -> Node:
    """``"id"`` or ``["union" | "intersect", child, ...]``."""
    if isinstance(obj, str):
        return Leaf(obj)
    if not isinstance(obj, list) or not obj or obj[0] not in ("union", "intersect"):
        raise ValueError(f"bad region expression: {obj!r}")
    kids = tuple(parse_tree(c) for c in obj[1:])
    return Union(kids) if obj[0] == "union" else Intersect(kids)


def region_from_json(obj: dict) -> RegionExpr:
    env = {k: polygon_from_json(v) for k, v in obj["polygons"].items()}
    return RegionExpr(parse_tree(obj["expr"]), env)


def _eval(node: Node, env, L: Line, cache: dict) -> IntervalSet:
    if isinstance(node, Leaf):
        if node.id not in env:
            raise UnboundId(node.id)
        if node.id not in cache:
            cache[node.id] = IntervalSet.of(line_profile(L, env[node.id]).inside_intervals)
        return cache[node.id]
    parts = [_eval(c, env, L, cache) for c in node.children]
    acc = parts[0]
    for p in parts[1:]:
        acc = acc | p if isinstance(node, Union) else acc & p
    return acc


def line_intervals(E: RegionExpr, L: Line) -> IntervalSet:
    return _eval(E.tree, E.env, L, {})


# -- degree ----------------------------------------------------------------


def edge_crossing_points(polys: Sequence[Polygon]) -> list[Point]:
    """Intersection points of edges belonging to different polygons."""
    out = []
    for A, B in combinations(polys, 2):
        for _, a, b in A.edges():
            for _, c, d in B.edges():
                if segments_intersect(a, b, c, d):
                    p = segment_intersection_point(a, b, c, d)
                    if p is not None:
                        out.append(p)
    return out


def arrangement_points(E: RegionExpr) -> list[Point]:
    polys = E.polygons()
    pts = [v for P in polys for v in P.vertices]
    return list(dict.fromkeys(pts + edge_crossing_points(polys)))


def _random_line(rng: random.Random, box) -> Line:
    x0, y0, x1, y1 = box
    w, h = x1 - x0, y1 - y0

    def pt():
        return Point(
            x0 - w / 2 + 2 * w * Fraction(rng.randrange(10**6), 10**6),
            y0 - h / 2 + 2 * h * Fraction(rng.randrange(10**6), 10**6),
        )

    p, q = pt(), pt()
    while p == q:
        q = pt()
    return Line.through(p, q)


def _bbox(polys):
    boxes = [P.bbox() for P in polys]
    return (
        min(b[0] for b in boxes),
        min(b[1] for b in boxes),
        max(b[2] for b in boxes),
        max(b[3] for b in boxes),
    )


def degree_witness(E: RegionExpr, random_lines: int = 200, seed: int = 0) -> tuple[int, Optional[Line]]:
    best, witness = 0, None
    for L in candidate_lines(arrangement_points(E)):
        c = len(line_intervals(E, L))
        if c > best:
            best, witness = c, L
    rng = random.Random(seed)
    box = _bbox(E.polygons())
    for _ in range(random_lines):
        L = _random_line(rng, box)
        c = len(line_intervals(E, L))
        assert c <= best, f"random line found {c} components, candidates only {best}"
    return best, witness


def empirical_degree(E: RegionExpr, random_lines: int = 200, seed: int = 0) -> int:
    return degree_witness(E, random_lines, seed)[0]


# -- intersections and Helly -----------------------------------------------


def intersection_nonempty(polys: Sequence[Polygon]) -> Optional[Point]:
    """A point common to all polygons (closed), or None."""
    if not polys:
        raise ValueError("need at least one polygon")
    cands = [v for P in polys for v in P.vertices] + edge_crossing_points(polys)
    for p in dict.fromkeys(cands):
        if all(point_in_polygon(p, P) != "outside" for P in polys):
            return p
    return None


@dataclass
class HellyReport:
    m: int
    members_two_convex: list[bool]
    subfamily_witnesses: list[Optional[Point]]
    edge_midpoints_ok: list[bool]
    full_witness: Optional[Point]

    @property
    def ok(self) -> bool:
        return (
            all(self.members_two_convex)
            and all(w is not None for w in self.subfamily_witnesses)
            and all(self.edge_midpoints_ok)
            and self.full_witness is None
        )

    def to_json(self) -> dict:
        pt = lambda p: None if p is None else [str(p.x), str(p.y)]  # noqa: E731
        return {
            "m": self.m,
            "ok": self.ok,
            "members_two_convex": self.members_two_convex,
            "subfamily_witnesses": [pt(p) for p in self.subfamily_witnesses],
            "edge_midpoints_ok": self.edge_midpoints_ok,
            "full_intersection": pt(self.full_witness),
        }


def helly_check(m: int) -> HellyReport:
    """Every m-1 members of the strip family meet, all m do not.

    Checking the m maximal proper subfamilies covers every proper one. The
    subfamily without member j must also contain the midpoint of edge j of
    the underlying m-gon, which member j avoids.
    """
    from .fixtures import helly_family, helly_polygon

    fam = helly_family(m)
    Q = helly_polygon(m)
    two = [recognize_2convex(P).is_two_convex for P in fam]
    wits, mids = [], []
    for j in range(m):
        rest = [P for i, P in enumerate(fam) if i != j]
        wits.append(intersection_nonempty(rest))
        a, b = Q[j], Q[(j + 1) % m]
        mid = Point((a.x + b.x) / 2, (a.y + b.y) / 2)
        mids.append(
            all(point_in_polygon(mid, P) != "outside" for P in rest)
            and point_in_polygon(mid, fam[j]) == "outside"
        )
    return HellyReport(m, two, wits, mids, intersection_nonempty(fam))
