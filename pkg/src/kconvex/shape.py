"""Convex-chain structure of 2-convex polygons.

Between two consecutive hull vertices the boundary of a 2-convex polygon
runs convex vertices, then reflex ones, then convex ones again. Cutting
every pocket at its reflex run splits the boundary into at most 2h convex
chains for h hull vertices, which yields large convex-position subsets and
a partition of the vertex set into few convex-position groups.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .exactgeom import GeometryError, Polygon, convex_hull, validate_polygon, vertex_kind
from .twoconvex import recognize_2convex


class ShapeError(ValueError):
    pass


class NotTwoConvex(ShapeError):
    pass


class PatternViolation(ShapeError):
    def __init__(self, pocket: int, index: int):
        super().__init__(f"pocket {pocket}: vertex {index} breaks the convex/reflex/convex pattern")
        self.pocket = pocket
        self.index = index


class ChainNotConvex(ShapeError):
    def __init__(self, chain: int):
        super().__init__(f"chain {chain} is not in convex position")
        self.chain = chain


class SubpolygonInvalid(ShapeError):
    def __init__(self, round_: int, reason: str):
        super().__init__(f"round {round_}: induced subpolygon rejected ({reason})")
        self.round = round_
        self.reason = reason


@dataclass(frozen=True)
class Pocket:
    """Boundary chain from hull vertex ``start`` to hull vertex ``end``.

    ``c1`` begins with ``start``, ``c3`` ends with ``end``; all vertex lists
    are in boundary order.
    """

    start: int
    end: int
    c1: tuple[int, ...]
    c2: tuple[int, ...]
    c3: tuple[int, ...]

    def to_json(self) -> dict:
        return {"start": self.start, "end": self.end, "c1": list(self.c1), "c2": list(self.c2), "c3": list(self.c3)}


def _require_two_convex(P: Polygon) -> None:
    if not recognize_2convex(P).is_two_convex:
        raise NotTwoConvex("polygon is not 2-convex")


def _cyclic(P: Polygon, a: int, b: int) -> list[int]:
    """Indices from a to b inclusive, walking forward."""
    n = P.n
    out = [a]
    while out[-1] != b:
        out.append((out[-1] + 1) % n)
    return out


def pocket_chains(P: Polygon, check: bool = True) -> list[Pocket]:
    if check:
        _require_two_convex(P)
    hull = convex_hull(P.vertices)
    n = P.n
    kinds = [vertex_kind(P, i) for i in range(n)]
    pockets = []
    for h, (a, b) in enumerate(zip(hull, hull[1:] + hull[:1])):
        if (a + 1) % n == b:
            continue
        chain = _cyclic(P, a, b)
        # phases: 0 = leading convex run, 1 = reflex run, 2 = trailing convex run
        phase = 0
        parts: list[list[int]] = [[], [], []]
        for i in chain:
            if kinds[i] == "reflex":
                if phase == 2:
                    raise PatternViolation(len(pockets), i)
                phase = 1
            elif phase == 1:
                phase = 2
            parts[phase].append(i)
        if not parts[1]:
            # no reflex run: leave only the end vertex in the trailing part
            parts[2] = [parts[0].pop()]
        elif not parts[2]:  # pragma: no cover - the hull vertex b is convex
            raise PatternViolation(len(pockets), b)
        pockets.append(Pocket(a, b, tuple(parts[0]), tuple(parts[1]), tuple(parts[2])))
    return pockets


def _in_convex_position(P: Polygon, idx: list[int]) -> bool:
    if len(idx) <= 2:
        return True
    pts = [P[i] for i in idx]
    try:
        return len(convex_hull(pts)) == len(pts)
    except GeometryError:
        return False


def _split_convex(P: Polygon, chain: list[int]) -> list[list[int]]:
    """Fewest consecutive pieces of ``chain`` whose vertex sets are in convex position.

    Convex position is inherited by subsets, so taking maximal pieces
    greedily is optimal.
    """
    pieces: list[list[int]] = []
    cur: list[int] = []
    for i in chain:
        if _in_convex_position(P, cur + [i]):
            cur.append(i)
        else:
            pieces.append(cur)
            cur = [i]
    pieces.append(cur)
    return pieces


def convex_chains(P: Polygon, check: bool = True) -> list[list[int]]:
    """Boundary split into convex-position chains, each in boundary order.

    One chain runs through each maximal stretch of hull vertices together
    with the convex runs on both sides; each reflex run is a chain of its
    own. A stretch that wraps around too far to be in convex position (few
    pockets, long convex runs) is cut greedily. Chains are listed in
    boundary order starting after the first pocket's reflex run.
    """
    pockets = pocket_chains(P, check)
    if not pockets:
        return [list(range(P.n))]
    chains: list[list[int]] = []
    # the convex stretch after pocket p ends where pocket p+1 begins
    for p, pk in enumerate(pockets):
        nxt = pockets[(p + 1) % len(pockets)]
        stretch = list(pk.c3) + _cyclic(P, pk.end, nxt.start)[1:] + list(nxt.c1)[1:]
        chains.extend(_split_convex(P, stretch))
        if nxt.c2:
            chains.extend(_split_convex(P, list(nxt.c2)))
    for c, chain in enumerate(chains):
        if not _in_convex_position(P, chain):  # pragma: no cover - guaranteed by the split
            raise ChainNotConvex(c)
    return chains


def largest_convex_subset(P: Polygon, check: bool = True) -> list[int]:
    """Hull vertices or the longest convex chain, whichever is larger.

    The hull wins ties; among chains of equal length the one starting at
    the lowest vertex index wins.
    """
    hull = convex_hull(P.vertices)
    best = list(hull)
    chains = convex_chains(P, check)
    top = max(len(c) for c in chains)
    if top > len(best):
        best = min((c for c in chains if len(c) == top), key=lambda c: c[0])
    if not _in_convex_position(P, best):  # pragma: no cover - guarded by convex_chains
        raise ChainNotConvex(-1)
    return best


def partition_bound(n: int) -> int:
    return math.ceil(2 * math.sqrt(2 * n))


def convex_partition(P: Polygon) -> list[list[int]]:
    """Groups of vertices in convex position, peeled one largest subset at a time.

    Each round keeps the remaining vertices in their boundary order; the
    induced polygon must be valid and 2-convex, otherwise
    :class:`SubpolygonInvalid` is raised for that round.
    """
    remaining = list(range(P.n))
    parts = []
    rnd = 0
    while len(remaining) > 3:
        pts = [P[i] for i in remaining]
        try:
            Q = validate_polygon(pts)
        except GeometryError as exc:
            raise SubpolygonInvalid(rnd, str(exc)) from None
        if not recognize_2convex(Q).is_two_convex:
            raise SubpolygonInvalid(rnd, "not 2-convex")
        back = {pt: i for pt, i in zip(pts, remaining)}
        part = [back[Q[j]] for j in largest_convex_subset(Q, check=False)]
        parts.append(part)
        taken = set(part)
        remaining = [i for i in remaining if i not in taken]
        rnd += 1
    if remaining:
        parts.append(remaining)
    return parts
