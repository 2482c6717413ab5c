from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import points, rationals
from kconvex.exactgeom import (
    CollinearRun,
    Direction,
    DuplicateVertex,
    GeometryError,
    Line,
    Point,
    SelfIntersection,
    TooFewVertices,
    convex_hull,
    in_convex_position,
    orient_value,
    orientation,
    point_in_polygon,
    polygon_from_coords,
    polygon_from_json,
    segments_cross,
    segments_intersect,
    validate_polygon,
    vertex_kind,
    winding_number,
)


def test_orientation_basic():
    assert orientation((0, 0), (1, 0), (0, 1)) == "left"
    assert orientation((0, 0), (0, 1), (1, 0)) == "right"
    assert orientation((0, 0), (1, 1), (3, 3)) == "collinear"


def test_floats_rejected():
    with pytest.raises(TypeError):
        Point.of(0.5, 1)


@given(points, points, points)
def test_orientation_antisymmetric(p, q, r):
    assert orient_value(p, q, r) == -orient_value(q, p, r)
    assert orient_value(p, q, r) == orient_value(q, r, p)


@given(points, points, rationals)
def test_point_on_line_is_exactly_collinear(p, q, t):
    # exactness: an affine combination never drifts off the line
    r = (p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]))
    assert orient_value(p, q, r) == 0


def test_validate_orients_counterclockwise():
    P = validate_polygon([(0, 0), (0, 1), (1, 1), (1, 0)])
    assert P.area() == 1
    assert P.vertices[0] == Point.of(1, 0)


@pytest.mark.parametrize(
    "coords, exc",
    [
        ([(0, 0), (1, 0)], TooFewVertices),
        ([(0, 0), (1, 0), (1, 0), (0, 1)], DuplicateVertex),
        ([(0, 0), (1, 0), (2, 0), (1, 1)], CollinearRun),
        ([(0, 0), (2, 2), (2, 0), (0, 2)], SelfIntersection),
    ],
)
def test_validate_rejects(coords, exc):
    with pytest.raises(exc):
        validate_polygon(coords)


def test_point_in_polygon(square):
    assert point_in_polygon((Fraction(1, 2), Fraction(1, 2)), square) == "inside"
    assert point_in_polygon((1, Fraction(1, 2)), square) == "boundary"
    assert point_in_polygon((2, 0), square) == "outside"
    assert winding_number((Fraction(1, 2), Fraction(1, 2)), square) == 1


def test_segments():
    assert segments_cross((0, 0), (2, 2), (0, 2), (2, 0))
    assert not segments_cross((0, 0), (1, 1), (1, 1), (2, 0))
    assert segments_intersect((0, 0), (1, 1), (1, 1), (2, 0))
    assert not segments_intersect((0, 0), (1, 0), (0, 1), (1, 1))


def test_hull_and_convex_position():
    pts = [(0, 0), (2, 0), (1, 1), (2, 2), (0, 2)]
    assert sorted(convex_hull(pts)) == [0, 1, 3, 4]
    assert not in_convex_position(pts)
    assert in_convex_position([(0, 0), (2, 0), (2, 2), (0, 2)])


def test_vertex_kinds():
    P = polygon_from_coords([(0, 0), (4, 0), (4, 4), (2, 1), (0, 4)])
    assert [vertex_kind(P, i) for i in range(5)] == ["convex", "convex", "convex", "reflex", "convex"]


def test_direction_canonical_and_oriented():
    assert Direction.of(-2, -4) == Direction(1, 2)
    assert Direction.of(-2, -4, oriented=True) == Direction(-1, -2)
    with pytest.raises(GeometryError):
        Direction.of(0, 0)


@given(points, points)
def test_line_sides(p, q):
    if p == q:
        return
    L = Line.through(p, q)
    assert L.side(p) == 0 and L.side(q) == 0
    assert L.param(L.point_at(Fraction(3, 7))) == Fraction(3, 7)


@given(st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5)), min_size=3, max_size=3, unique=True))
def test_json_roundtrip_exact(coords):
    if orient_value(*coords) == 0:
        return
    P = polygon_from_coords([(Fraction(x, 3), Fraction(y, 7)) for x, y in coords])
    assert polygon_from_json(P.to_json()) == P


def test_json_rejects_missing_vertices():
    with pytest.raises(GeometryError):
        polygon_from_json({"pts": []})
