"""Vertex sorting along the boundary and sweep-line triangulation.

Vertices are ordered by (x, y, index). Both sorts insert the vertices in
boundary order and count key comparisons: ``sort_scan`` walks from the
previous insertion point of a sorted array, ``sort_finger`` inserts into a
splay tree, whose dynamic-finger behaviour makes an insertion cost
logarithmic in its rank distance from the previous one.

Triangulation sweeps a line in that order, adds diagonals to cut the
polygon into x-monotone pieces and triangulates each piece with the usual
chain stack. Ordering by (x, y) is the order of a line slightly tilted from
vertical, so the number of edges cut by the sweep line is always a
generic-line crossing count and never exceeds the stabbing number.
"""
from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from typing import Optional

import numpy as np

from .exactgeom import Polygon, orient_value, sign


@dataclass(frozen=True)
class SortedVertices:
    order: tuple[int, ...]
    comparison_count: int


def _keys(P: Polygon) -> list[tuple]:
    return [(v.x, v.y, i) for i, v in enumerate(P.vertices)]


def sort_scan(P: Polygon) -> SortedVertices:
    """Insertion sort in boundary order, each search starting at the last insertion point."""
    keys = _keys(P)
    out: list[int] = []
    pos = 0
    count = 0
    for i in range(len(keys)):
        k = keys[i]
        # walk left while the left neighbour is larger, else right while the right one is smaller
        p = min(pos, len(out))
        moved_left = False
        while p > 0:
            count += 1
            if keys[out[p - 1]] > k:
                p -= 1
                moved_left = True
            else:
                break
        if not moved_left:
            while p < len(out):
                count += 1
                if keys[out[p]] < k:
                    p += 1
                else:
                    break
        out.insert(p, i)
        pos = p
    return SortedVertices(tuple(out), count)


class _Node:
    __slots__ = ("key", "val", "left", "right", "parent")

    def __init__(self, key, val, parent=None):
        self.key = key
        self.val = val
        self.left: Optional[_Node] = None
        self.right: Optional[_Node] = None
        self.parent = parent


class SplayTree:
    """Bottom-up splay tree keyed by comparable keys, counting key comparisons."""

    def __init__(self):
        self.root: Optional[_Node] = None
        self.comparisons = 0
        self.size = 0

    def _rotate(self, x: _Node) -> None:
        p = x.parent
        g = p.parent
        if p.left is x:
            p.left = x.right
            if x.right:
                x.right.parent = p
            x.right = p
        else:
            p.right = x.left
            if x.left:
                x.left.parent = p
            x.left = p
        p.parent = x
        x.parent = g
        if g is None:
            self.root = x
        elif g.left is p:
            g.left = x
        else:
            g.right = x

    def _splay(self, x: _Node) -> None:
        while x.parent is not None:
            p = x.parent
            g = p.parent
            if g is None:
                self._rotate(x)
            elif (g.left is p) == (p.left is x):
                self._rotate(p)
                self._rotate(x)
            else:
                self._rotate(x)
                self._rotate(x)

    def insert(self, key, val=None) -> None:
        self.size += 1
        if self.root is None:
            self.root = _Node(key, val)
            return
        cur = self.root
        while True:
            self.comparisons += 1
            if key < cur.key:
                if cur.left is None:
                    cur.left = _Node(key, val, cur)
                    node = cur.left
                    break
                cur = cur.left
            else:
                if cur.right is None:
                    cur.right = _Node(key, val, cur)
                    node = cur.right
                    break
                cur = cur.right
        self._splay(node)

    def items(self):
        stack, cur = [], self.root
        while stack or cur:
            while cur:
                stack.append(cur)
                cur = cur.left
            cur = stack.pop()
            yield cur.key, cur.val
            cur = cur.right


def sort_finger(P: Polygon) -> SortedVertices:
    """Splay-tree insertion sort in boundary order."""
    tree = SplayTree()
    for k in _keys(P):
        tree.insert(k, k[2])
    return SortedVertices(tuple(v for _, v in tree.items()), tree.comparisons)


# -- triangulation ---------------------------------------------------------


@dataclass(frozen=True)
class Triangulation:
    triangles: tuple[tuple[int, int, int], ...]
    diagonals: tuple[tuple[int, int], ...] = ()
    max_status: int = 0
    comparison_count: int = 0

    def __len__(self) -> int:
        return len(self.triangles)

    def to_json(self) -> dict:
        return {"triangles": [list(t) for t in self.triangles]}


def _orient(P: Polygon, a: int, b: int, c: int) -> int:
    return sign(orient_value(P[a], P[b], P[c]))


def _monotone_diagonals(P: Polygon, order: list[int]):
    """Diagonals cutting P into pieces monotone in the sweep order.

    Returns (diagonals, max number of edges cut by the sweep line).
    """
    n = P.n
    rank = [0] * n
    for r, i in enumerate(order):
        rank[i] = r

    def before(a, b):
        return rank[a] < rank[b]

    # status: edges (i, i+1) with the interior below them, ordered by height
    # at the sweep line; stored as lists of edge ids kept sorted via orientation
    status: list[int] = []
    helper: dict[int, int] = {}
    kind: dict[int, str] = {}
    diagonals: list[tuple[int, int]] = []

    def upper_lower(e):
        a, b = e, (e + 1) % n
        return (a, b) if before(a, b) else (b, a)

    def edge_below(e, v) -> bool:
        """Edge e passes below vertex v at the sweep position of v."""
        a, b = upper_lower(e)
        return _orient(P, a, b, v) > 0

    def find_below(v) -> int:
        # status is sorted bottom to top; return the highest edge below v
        lo, hi = 0, len(status)
        while lo < hi:
            mid = (lo + hi) // 2
            if edge_below(status[mid], v):
                lo = mid + 1
            else:
                hi = mid
        return lo - 1

    def insert(e, v):
        status.insert(find_below(v) + 1, e)

    def remove(e):
        status.remove(e)

    for v in range(n):
        u, w = (v - 1) % n, (v + 1) % n
        convex = _orient(P, u, v, w) > 0
        if before(v, u) and before(v, w):
            kind[v] = "start" if convex else "split"
        elif before(u, v) and before(w, v):
            kind[v] = "end" if convex else "merge"
        else:
            kind[v] = "regular"

    active = 0
    max_active = 0
    for v in order:
        u, w = (v - 1) % n, (v + 1) % n
        # edges change from unseen to cut, or from cut to finished
        for nb in (u, w):
            active += 1 if before(v, nb) else -1
        max_active = max(max_active, active)
        k = kind[v]
        prev_e = (v - 1) % n  # edge u -> v
        if k == "start":
            insert(v, v)
            helper[v] = v
        elif k == "end":
            if kind[helper[prev_e]] == "merge":
                diagonals.append((v, helper[prev_e]))
            remove(prev_e)
        elif k == "split":
            j = status[find_below(v)]
            diagonals.append((v, helper[j]))
            helper[j] = v
            insert(v, v)
            helper[v] = v
        elif k == "merge":
            if kind[helper[prev_e]] == "merge":
                diagonals.append((v, helper[prev_e]))
            remove(prev_e)
            j = status[find_below(v)]
            if kind[helper[j]] == "merge":
                diagonals.append((v, helper[j]))
            helper[j] = v
        else:
            # interior lies above the boundary iff the boundary runs forward here
            if before(u, v):
                # walking left to right along the lower boundary
                if kind[helper[prev_e]] == "merge":
                    diagonals.append((v, helper[prev_e]))
                remove(prev_e)
                insert(v, v)
                helper[v] = v
            else:
                j = status[find_below(v)]
                if kind[helper[j]] == "merge":
                    diagonals.append((v, helper[j]))
                helper[j] = v
    return diagonals, max_active


def _faces(P: Polygon, diagonals) -> list[list[int]]:
    n = P.n
    adj: dict[int, list[int]] = {i: [(i - 1) % n, (i + 1) % n] for i in range(n)}
    for a, b in diagonals:
        adj[a].append(b)
        adj[b].append(a)

    def half(d):
        dx, dy = d
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def ccw_sorted(c):
        cx, cy = P[c]

        def cmp(a, b):
            da = (P[a].x - cx, P[a].y - cy)
            db = (P[b].x - cx, P[b].y - cy)
            ha, hb = half(da), half(db)
            if ha != hb:
                return ha - hb
            cr = da[0] * db[1] - da[1] * db[0]
            return -1 if cr > 0 else (1 if cr < 0 else 0)

        return sorted(adj[c], key=cmp_to_key(cmp))

    rot = {c: ccw_sorted(c) for c in adj}
    nxt = {}
    for w, nbrs in rot.items():
        m = len(nbrs)
        for idx, u in enumerate(nbrs):
            # arriving along u -> w, leave by the neighbour clockwise of u
            nxt[(u, w)] = (w, nbrs[(idx - 1) % m])
    seen = set()
    faces = []
    starts = [(i, (i + 1) % n) for i in range(n)] + list(diagonals) + [(b, a) for a, b in diagonals]
    for he in starts:
        if he in seen:
            continue
        face = []
        cur = he
        while cur not in seen:
            seen.add(cur)
            face.append(cur[0])
            cur = nxt[cur]
        faces.append(face)
    return faces


def _triangulate_monotone(P: Polygon, face: list[int], rank: list[int]) -> list[tuple[int, int, int]]:
    m = len(face)
    if m == 3:
        a, b, c = face
        return [(a, b, c)]
    pos_first = min(range(m), key=lambda i: rank[face[i]])
    pos_last = max(range(m), key=lambda i: rank[face[i]])
    chain = {}
    i = pos_first
    while i != pos_last:
        chain[face[i]] = "lower"
        i = (i + 1) % m
    while i != pos_first:
        chain[face[i]] = "upper"
        i = (i + 1) % m
    chain[face[pos_first]] = "both"
    chain[face[pos_last]] = "both"
    us = sorted(face, key=lambda v: rank[v])
    tris: list[tuple[int, int, int]] = []

    def emit(a, b, c):
        if _orient(P, a, b, c) > 0:
            tris.append((a, b, c))
        else:
            tris.append((a, c, b))

    stack = [us[0], us[1]]
    for j in range(2, m - 1):
        uj = us[j]
        if chain[uj] != chain[stack[-1]]:
            while len(stack) > 1:
                top = stack.pop()
                emit(uj, top, stack[-1])
            stack = [us[j - 1], uj]
        else:
            last = stack.pop()
            want = 1 if chain[uj] == "lower" else -1
            while stack and _orient(P, stack[-1], last, uj) == want:
                emit(stack[-1], last, uj)
                last = stack.pop()
            stack.append(last)
            stack.append(uj)
    un = us[-1]
    while len(stack) > 1:
        top = stack.pop()
        emit(un, top, stack[-1])
    return tris


def triangulate(P: Polygon, sort: str = "finger") -> Triangulation:
    if sort == "finger":
        sv = sort_finger(P)
    elif sort == "scan":
        sv = sort_scan(P)
    else:
        raise ValueError(f"unknown sort {sort!r}")
    order = list(sv.order)
    rank = [0] * P.n
    for r, i in enumerate(order):
        rank[i] = r
    diagonals, max_active = _monotone_diagonals(P, order)
    tris: list[tuple[int, int, int]] = []
    faces = _faces(P, diagonals)
    faces.sort(key=lambda f: min(rank[v] for v in f))
    for face in faces:
        tris.extend(_triangulate_monotone(P, face, rank))
    return Triangulation(tuple(tris), tuple(diagonals), max_active, sv.comparison_count)


# -- validation ------------------------------------------------------------


@dataclass(frozen=True)
class TriangulationReport:
    ok: bool
    reason: str = ""
    detail: tuple = field(default=())

    def __bool__(self) -> bool:
        return self.ok


def _int_arrays(P: Polygon):
    xs, ys = P.integer_coords
    big = max(max(map(abs, xs)), max(map(abs, ys)))
    dtype = np.int64 if big < (1 << 29) else object
    return np.array(xs, dtype=dtype), np.array(ys, dtype=dtype)


def _orient_arr(px, py, qx, qy, rx, ry):
    v = (qx - px) * (ry - py) - (qy - py) * (rx - px)
    if v.dtype == object:
        return np.array([sign(t) for t in v], dtype=np.int64)
    return np.sign(v)


def _proper_crossings(P: Polygon, edges: list[tuple[int, int]]):
    """First pair of edges crossing at a point interior to both, if any."""
    X, Y = _int_arrays(P)
    A = np.array([a for a, _ in edges])
    B = np.array([b for _, b in edges])
    ax, ay, bx, by = X[A], Y[A], X[B], Y[B]
    for e, (a, b) in enumerate(edges):
        o1 = _orient_arr(X[a], Y[a], X[b], Y[b], ax, ay)
        o2 = _orient_arr(X[a], Y[a], X[b], Y[b], bx, by)
        o3 = _orient_arr(ax, ay, bx, by, X[a], Y[a])
        o4 = _orient_arr(ax, ay, bx, by, X[b], Y[b])
        hit = (o1 * o2 < 0) & (o3 * o4 < 0)
        hit[e] = False
        if hit.any():
            return e, int(np.flatnonzero(hit)[0])
    return None


def validate_triangulation(P: Polygon, T) -> TriangulationReport:
    tris = list(T.triangles if isinstance(T, Triangulation) else T)
    n = P.n
    if len(tris) != n - 2:
        return TriangulationReport(False, "count", (len(tris), n - 2))
    total = Fraction(0)
    for t, (a, b, c) in enumerate(tris):
        if not all(0 <= i < n for i in (a, b, c)) or len({a, b, c}) < 3:
            return TriangulationReport(False, "indices", (t,))
        ov = orient_value(P[a], P[b], P[c])
        if ov <= 0:
            return TriangulationReport(False, "orientation", (t,))
        total += Fraction(ov, 2)
    if total != P.area():
        return TriangulationReport(False, "area", (str(total), str(P.area())))
    usage: dict[tuple[int, int], int] = {}
    for a, b, c in tris:
        for u, w in ((a, b), (b, c), (c, a)):
            key = (min(u, w), max(u, w))
            usage[key] = usage.get(key, 0) + 1
    boundary = {(min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)}
    for key, cnt in sorted(usage.items()):
        want = 1 if key in boundary else 2
        if cnt != want:
            return TriangulationReport(False, "edge_usage", key)
    edges = sorted(usage)
    hit = _proper_crossings(P, edges)
    if hit is not None:
        return TriangulationReport(False, "crossing", (edges[hit[0]], edges[hit[1]]))
    X, Y = _int_arrays(P)
    for a, b in edges:
        if (a, b) in boundary:
            continue
        # with no crossings, a diagonal is inside iff it leaves a into the interior cone
        if not _in_cone(P, a, b):
            return TriangulationReport(False, "diagonal_outside", (a, b))
        o = _orient_arr(X[a], Y[a], X[b], Y[b], X, Y)
        between = (min(X[a], X[b]) <= X) & (X <= max(X[a], X[b])) & (
            min(Y[a], Y[b]) <= Y) & (Y <= max(Y[a], Y[b]))
        on = (o == 0) & between
        on[a] = on[b] = False
        if on.any():
            return TriangulationReport(False, "diagonal_through_vertex", (a, b, int(np.flatnonzero(on)[0])))
    return TriangulationReport(True)


def _in_cone(P: Polygon, a: int, b: int) -> bool:
    n = P.n
    u, w = P[(a - 1) % n], P[(a + 1) % n]
    p, q = P[a], P[b]
    if orient_value(u, p, w) > 0:
        return orient_value(p, w, q) > 0 and orient_value(p, q, u) > 0
    return not (orient_value(p, q, w) >= 0 and orient_value(p, u, q) >= 0)
