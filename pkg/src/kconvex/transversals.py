"""Generalized geometric permutations of polygon families.

A transversal line meets every member of a family; reading the components
of the line inside each member in order along the line gives a sequence in
which a nonconvex member may appear more than once. Sequences are
identified with their reversals.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb
from typing import Mapping, Optional

from .exactgeom import Line, Polygon
from .perturb import candidate_lines
from .stabbing import line_profile


class OverlapAmbiguity(ValueError):
    """Components of two different members overlap along a line."""


@dataclass(frozen=True, order=True)
class Ggp:
    seq: tuple[str, ...]

    @classmethod
    def canonical(cls, seq) -> "Ggp":
        seq = tuple(seq)
        return cls(min(seq, seq[::-1]))

    def __len__(self) -> int:
        return len(self.seq)

    def to_json(self) -> list[str]:
        return list(self.seq)


def transversal_sequence(L: Line, polys: Mapping[str, Polygon]) -> Optional[Ggp]:
    comps = []
    for pid, P in polys.items():
        ivs = line_profile(L, P).inside_intervals
        if not ivs:
            return None
        comps.extend((a, b, pid) for a, b in ivs)
    comps.sort()
    for (a1, b1, p1), (a2, b2, p2) in zip(comps, comps[1:]):
        if a2 <= b1 and p1 != p2:
            raise OverlapAmbiguity(f"{p1} and {p2} overlap along the line")
    return Ggp.canonical(pid for _, _, pid in comps)


def _all_vertices(polys: Mapping[str, Polygon]):
    return [v for P in polys.values() for v in P.vertices]


def enumerate_ggp_with_witnesses(polys: Mapping[str, Polygon]) -> dict[Ggp, Line]:
    """Every Ggp of the family with one witness line each.

    The sequence only depends on which side of the line each vertex lies
    and, for disjoint members, not on anything else, so the candidate lines
    of the vertex arrangement reach every Ggp.
    """
    found: dict[Ggp, Line] = {}
    for L in candidate_lines(_all_vertices(polys)):
        g = transversal_sequence(L, polys)
        if g is not None and g not in found:
            found[g] = L
    return dict(sorted(found.items()))


def enumerate_ggp(polys: Mapping[str, Polygon]) -> set[Ggp]:
    return set(enumerate_ggp_with_witnesses(polys))


def ggp_bound(polys: Mapping[str, Polygon]) -> int:
    """Cell count of an arrangement of 2E lines, E the total edge count."""
    E = sum(P.n for P in polys.values())
    return comb(2 * E, 2) + 2 * E + 1


def ggp_upper_check(polys: Mapping[str, Polygon]) -> bool:
    return len(enumerate_ggp(polys)) <= ggp_bound(polys)


def sampled_ggps(polys: Mapping[str, Polygon], trials: int = 10_000, seed: int = 0) -> set[Ggp]:
    """Ggps seen on random lines through the family's bounding box."""
    from .regions import _bbox, _random_line

    rng = random.Random(seed)
    box = _bbox(list(polys.values()))
    out = set()
    for _ in range(trials):
        g = transversal_sequence(_random_line(rng, box), polys)
        if g is not None:
            out.add(g)
    return out


def family(polys) -> dict[str, Polygon]:
    """Name a list of polygons A, B, ..., Z, then P26, P27, ..."""
    return {(chr(65 + i) if i < 26 else f"P{i}"): P for i, P in enumerate(polys)}
