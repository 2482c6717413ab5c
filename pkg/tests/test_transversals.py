from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kconvex.exactgeom import Line, polygon_from_coords
from kconvex.fixtures import convex_ngon, quad_row
from kconvex.transversals import (
    Ggp,
    OverlapAmbiguity,
    enumerate_ggp,
    family,
    ggp_bound,
    ggp_upper_check,
    sampled_ggps,
    transversal_sequence,
)


def square(x, y, s=1):
    return polygon_from_coords([(x, y), (x + s, y), (x + s, y + s), (x, y + s)])


@given(st.lists(st.sampled_from("ABCD"), min_size=1, max_size=8))
def test_canonical_is_reversal_invariant(seq):
    assert Ggp.canonical(seq) == Ggp.canonical(seq[::-1])
    assert Ggp.canonical(Ggp.canonical(seq).seq) == Ggp.canonical(seq)


def test_two_squares_have_one_ggp():
    fam = family([square(0, 0), square(3, 0)])
    assert enumerate_ggp(fam) == {Ggp(("A", "B"))}


def test_convex_family_uses_each_member_once():
    fam = family([square(4 * i, (i * i) % 3) for i in range(3)])
    ggps = enumerate_ggp(fam)
    assert ggps
    for g in ggps:
        assert sorted(g.seq) == sorted(fam)


def test_dart_has_single_and_double_visits():
    fam = family(quad_row(3)[:1])
    assert enumerate_ggp(fam) == {Ggp(("A",)), Ggp(("A", "A"))}


@pytest.mark.parametrize("n,expected", [(3, 8), (4, 14), (5, 21)])
def test_quad_row_counts(n, expected):
    fam = family(quad_row(n))
    ggps = enumerate_ggp(fam)
    assert len(ggps) == expected
    assert comb(n, 2) <= len(ggps) <= ggp_bound(fam)
    assert ggp_upper_check(fam)


def test_sampling_finds_subset():
    fam = family(quad_row(4))
    sampled = sampled_ggps(fam, trials=2000, seed=1)
    assert sampled <= enumerate_ggp(fam)


def test_missing_member_means_no_sequence():
    fam = family([square(0, 0), square(3, 5)])
    assert transversal_sequence(Line.through((0, Fraction(1, 2)), (1, Fraction(1, 2))), fam) is None


def test_overlap_ambiguity():
    fam = family([square(0, 0, 2), square(1, 0, 2)])
    with pytest.raises(OverlapAmbiguity):
        transversal_sequence(Line.through((-1, 1), (5, 1)), fam)


def test_family_names():
    names = list(family([square(i, 0) for i in range(28)]))
    assert names[:2] == ["A", "B"] and names[26:] == ["P26", "P27"]


def _convex_family(m, seed):
    import random

    rng = random.Random(seed)
    polys, spots = [], set()
    while len(polys) < m:
        gx, gy = rng.randrange(6), rng.randrange(6)
        if (gx, gy) in spots:
            continue
        spots.add((gx, gy))
        shape = convex_ngon(rng.randrange(3, 7))
        polys.append(polygon_from_coords([(3 * gx + v.x, 3 * gy + v.y) for v in shape.vertices]))
    return family(polys)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
@pytest.mark.parametrize("seed", range(3))
def test_convex_families_are_ordinary_permutations(m, seed):
    fam = _convex_family(m, seed)
    ggps = enumerate_ggp(fam)
    for g in ggps:
        assert sorted(g.seq) == sorted(fam)
    assert len(ggps) <= 2 * m - 2
    if m == 2:
        assert len(ggps) == 1


def test_construction_lines_visit_above_twice():
    fam = quad_row(5)
    names = family(fam)
    reflex = [next(v for v in P.vertices if v.x == 3 * i and v.y < 1) for i, P in enumerate(fam)]
    for i in range(5):
        for j in range(i + 1, 5):
            L = Line.through(reflex[i], reflex[j])
            g = transversal_sequence(L, names)
            for k in set(range(5)) - {i, j}:
                above = L.side(reflex[k]) * L.side((reflex[k].x, reflex[k].y + 100)) > 0
                assert g.seq.count(chr(65 + k)) == (2 if above else 1)


@pytest.mark.slow
def test_sampling_never_escapes_enumeration():
    fam = family(quad_row(5))
    assert sampled_ggps(fam, trials=10_000, seed=0) <= enumerate_ggp(fam)
