import math

import pytest

from kconvex.exactgeom import convex_hull, in_convex_position
from kconvex.fixtures import amoeba, comb, convex_ngon, many_pockets, pseudo_triangle
from kconvex.shape import (
    NotTwoConvex,
    PatternViolation,
    SubpolygonInvalid,
    convex_chains,
    convex_partition,
    largest_convex_subset,
    partition_bound,
    pocket_chains,
)


def test_convex_polygon_single_chain():
    P = convex_ngon(9)
    assert pocket_chains(P) == []
    assert convex_chains(P) == [list(range(9))]
    assert len(largest_convex_subset(P)) == 9


def test_rejects_non_two_convex():
    with pytest.raises(NotTwoConvex):
        convex_chains(comb(3))


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_amoeba_structure(k):
    P = amoeba(k)
    chains = convex_chains(P)
    assert len(chains) == 2 * k
    assert all(len(c) == k for c in chains)
    assert len(largest_convex_subset(P)) == k == math.ceil(math.sqrt(P.n / 2))


def test_pockets_follow_pattern(two_convex_corpus):
    for name, P in two_convex_corpus:
        try:
            pockets = pocket_chains(P, check=False)
        except PatternViolation as exc:  # pragma: no cover - reported with context
            pytest.fail(f"{name}: {exc}")
        for pk in pockets:
            assert pk.c1[0] == pk.start and pk.c3[-1] == pk.end


def test_chains_cover_boundary_in_convex_position(two_convex_corpus):
    for name, P in two_convex_corpus:
        chains = convex_chains(P, check=False)
        flat = [i for c in chains for i in c]
        assert sorted(flat) == list(range(P.n)), name
        assert all(in_convex_position([P[i] for i in c]) for c in chains if len(c) >= 3), name
        hull = len(convex_hull(P.vertices))
        assert len(chains) <= max(1, 2 * hull), name


def test_largest_subset_bound(two_convex_corpus):
    for name, P in two_convex_corpus:
        S = largest_convex_subset(P, check=False)
        assert len(set(S)) == len(S)
        assert in_convex_position([P[i] for i in S]), name
        assert len(S) >= math.ceil(math.sqrt(P.n / 2)), name


def test_partition_parts(two_convex_corpus):
    findings = []
    for name, P in two_convex_corpus:
        try:
            parts = convex_partition(P)
        except SubpolygonInvalid as exc:
            findings.append((name, exc.round, exc.reason))
            continue
        flat = sorted(i for p in parts for i in p)
        assert flat == list(range(P.n)), name
        assert all(in_convex_position([P[i] for i in p]) for p in parts if len(p) >= 3), name
        assert len(parts) <= partition_bound(P.n), name
    print(f"SubpolygonInvalid findings: {findings}")


def test_partition_bound_values():
    assert partition_bound(32) == 16
    assert partition_bound(2) == 4


def test_pseudo_triangle_chains():
    P = pseudo_triangle(3)
    assert len(convex_chains(P)) <= 6
    assert len(pocket_chains(P)) == 3


def test_many_pockets_count():
    assert len(pocket_chains(many_pockets(14))) == 7
