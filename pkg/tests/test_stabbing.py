from fractions import Fraction

import pytest
from hypothesis import given

from conftest import random_polygons
from kconvex.exactgeom import Direction, Line, Point, polygon_from_coords
from kconvex.fixtures import comb, convex_ngon, random_simple_polygon, spiky_star
from kconvex.stabbing import (
    OverlapRun,
    Touch,
    TransversalCrossing,
    crossing_count,
    is_k_convex,
    line_profile,
    max_crossings_through,
    segment_components,
    stabbing_number,
    stabbing_oracle,
)


def horizontal(y):
    return Line(Point.of(0, y), Direction.of(1, 0))


def test_profile_square_interior_line(square):
    prof = line_profile(horizontal(Fraction(1, 2)), square)
    assert prof.crossing_count == 2
    assert prof.inside_intervals == ((0, 1),)


def test_profile_along_edge_is_one_component(square):
    prof = line_profile(horizontal(0), square)
    assert prof.crossing_count == 0
    assert prof.components == 1
    assert any(isinstance(e, OverlapRun) for e in prof.events)


def test_profile_touch_at_vertex(square):
    L = Line(Point.of(1, 1), Direction.of(1, -1))
    prof = line_profile(L, square)
    assert [type(e) for e in prof.events] == [Touch]
    assert prof.components == 1


def test_profile_through_reflex_vertex():
    P = polygon_from_coords([(0, 0), (4, 0), (4, 4), (2, 1), (0, 4)])
    prof = line_profile(horizontal(1), P)
    # passes through the notch apex: enters, touches, leaves
    assert prof.crossing_count == 2
    assert prof.components == 1
    assert sum(isinstance(e, TransversalCrossing) for e in prof.events) == 2


@pytest.mark.parametrize("n", [3, 5, 12])
def test_convex_is_two(n):
    assert stabbing_number(convex_ngon(n)).value == 2


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_comb(k):
    cert = stabbing_number(comb(k))
    assert cert.value == 2 * k
    assert crossing_count(cert.witness_line, comb(k)) == 2 * k


def test_spiky_star():
    assert stabbing_number(spiky_star(5)).value == 10


@given(random_polygons(max_n=18))
def test_witness_achieves_value_and_is_even(P):
    cert = stabbing_number(P)
    assert cert.value % 2 == 0
    assert crossing_count(cert.witness_line, P) == cert.value


@given(random_polygons(max_n=18))
def test_oracle_never_exceeds_exact(P):
    assert stabbing_oracle(P, trials=300, seed=1) <= stabbing_number(P).value


@pytest.mark.parametrize("seed", range(8))
def test_dense_oracle_reaches_exact_on_small_polygons(seed):
    # DERIVED: independent sampling agrees on small random inputs
    P = random_simple_polygon(8, seed)
    assert stabbing_oracle(P, trials=20_000, seed=seed) == stabbing_number(P).value


def test_max_crossings_through_pair_bounds_value():
    P = comb(3)
    best = max(max_crossings_through(P, i, j)[0] for i in range(P.n) for j in range(i + 1, P.n))
    assert best == stabbing_number(P).value


def test_is_k_convex():
    assert is_k_convex(comb(3), 3)
    assert not is_k_convex(comb(3), 2)


def test_segment_components(square):
    assert segment_components((-1, Fraction(1, 2)), (2, Fraction(1, 2)), square) == 1
    P = comb(2)
    assert segment_components((Fraction(1, 2), -10), (Fraction(1, 2), 10), P) == 2
