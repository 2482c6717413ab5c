import math

import pytest
from hypothesis import given

from conftest import random_polygons
from kconvex.exactgeom import polygon_from_coords
from kconvex.fixtures import comb, convex_ngon, spiky_star
from kconvex.stabbing import stabbing_number
from kconvex.sweep import (
    SplayTree,
    Triangulation,
    sort_finger,
    sort_scan,
    triangulate,
    validate_triangulation,
)


def reference_order(P):
    return tuple(i for *_, i in sorted((v.x, v.y, i) for i, v in enumerate(P.vertices)))


@given(random_polygons(max_n=40))
def test_sorts_match_reference(P):
    assert sort_scan(P).order == sort_finger(P).order == reference_order(P)


@given(random_polygons(max_n=30))
def test_triangulation_valid_and_status_bounded(P):
    T = triangulate(P)
    assert validate_triangulation(P, T).ok
    assert T.max_status <= stabbing_number(P).value


@pytest.mark.parametrize("sort", ["scan", "finger"])
def test_both_sorts_triangulate(sort):
    P = spiky_star(5)
    assert validate_triangulation(P, triangulate(P, sort=sort)).ok


def test_vertical_edges_and_ties():
    P = polygon_from_coords([(0, 0), (2, 0), (2, 2), (1, 1), (0, 2)])
    T = triangulate(P)
    assert validate_triangulation(P, T).ok
    assert len(T) == 3


def test_validator_reports_problems(square):
    assert validate_triangulation(square, [(0, 1, 2)]).reason == "count"
    assert validate_triangulation(square, [(0, 2, 1), (0, 2, 3)]).reason == "orientation"
    notch = polygon_from_coords([(0, 0), (4, 0), (4, 4), (2, 1), (0, 4)])
    assert validate_triangulation(notch, [(0, 1, 2)] * 3).reason == "area"
    # the same triangle twice has the right total area but reuses its edges
    assert validate_triangulation(square, [(0, 1, 2), (0, 1, 2)]).reason == "edge_usage"


def test_validator_catches_outside_diagonal():
    P = polygon_from_coords([(0, 0), (4, 0), (4, 4), (2, 1), (0, 4)])
    # (1,2,4) spans the notch: the diagonal 2-4 lies outside
    bad = Triangulation(((0, 1, 4), (1, 2, 4), (2, 3, 4)))
    assert not validate_triangulation(P, bad).ok


def test_splay_tree_counts_and_orders():
    t = SplayTree()
    for k in [5, 3, 8, 1, 4]:
        t.insert(k, k)
    assert [k for k, _ in t.items()] == [1, 3, 4, 5, 8]
    assert t.comparisons > 0


def test_sequential_inserts_are_cheap():
    t = SplayTree()
    for k in range(1000):
        t.insert(k)
    # dynamic finger: constant amortized cost for neighbouring inserts
    assert t.comparisons <= 3 * 1000


def test_comb_costs_grow_with_k():
    counts = [sort_finger(comb(k, n=256, check=False)).comparison_count for k in (2, 4, 8)]
    assert counts == sorted(counts)


def test_convex_sweep_status_two():
    P = convex_ngon(20)
    assert triangulate(P).max_status == 2
