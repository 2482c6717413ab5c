import pytest
from hypothesis import given

from conftest import random_polygons
from kconvex.exactgeom import Ray, Direction, Point, polygon_from_coords
from kconvex.fixtures import amoeba, comb, convex_ngon, many_pockets, pseudo_triangle, spike_rect, spiky_star
from kconvex.stabbing import max_crossings_through, stabbing_number
from kconvex.twoconvex import (
    DegenerateOverlap,
    InnerTangent,
    MultiHitRay,
    critical_range,
    extension_ray,
    find_inner_tangent,
    inner_tangent_pairs,
    ray_hits,
    recognize_2convex,
    reflex_vertices,
)


def oracle(P):
    return stabbing_number(P).value <= 4


@pytest.mark.parametrize(
    "make, expected",
    [
        (lambda: convex_ngon(7), True),
        (lambda: comb(1), True),
        (lambda: comb(2), True),
        (lambda: comb(3), False),
        (lambda: pseudo_triangle(4), True),
        (lambda: many_pockets(16), True),
        (lambda: amoeba(4), True),
        (lambda: spiky_star(4), False),
        (lambda: spike_rect(2), False),
    ],
)
def test_fixture_verdicts(make, expected):
    P = make()
    v = recognize_2convex(P)
    assert v.is_two_convex is expected
    assert oracle(P) is expected


@given(random_polygons(max_n=14))
def test_agrees_with_stabbing_oracle(P):
    assert recognize_2convex(P).is_two_convex == oracle(P)


@given(random_polygons(max_n=14))
def test_negative_witness_certifies_six_crossings(P):
    v = recognize_2convex(P)
    if v.is_two_convex or v.used_oracle:
        return
    w = v.witness
    if isinstance(w, InnerTangent):
        i, j = w.v, w.v2
    elif isinstance(w, MultiHitRay):
        i, j = w.vertex, (w.vertex + 1) % P.n
        # the ray prolongs one of the two edges at the vertex
        best = max(max_crossings_through(P, w.vertex, (w.vertex + d) % P.n)[0] for d in (-1, 1))
        assert best >= 6
        return
    else:
        i, j = w.edge_index, (w.edge_index + 1) % P.n
    assert max_crossings_through(P, i, j)[0] >= 6


@given(random_polygons(max_n=14))
def test_scan_matches_all_pairs(P):
    # the sweep finds an inner tangent iff the quadratic check does
    reflex = reflex_vertices(P)
    try:
        ranges = {v: critical_range(P, v) for v in reflex}
    except ValueError:
        # some extension ray has several hits: rejected before the scan
        return
    pair = find_inner_tangent(P, ranges)
    pairs = inner_tangent_pairs(P, ranges)
    assert (pair is None) == (not pairs)
    if pair is not None:
        assert tuple(sorted(pair)) in pairs


def test_critical_range_excludes_neighbours():
    P = amoeba(4)
    for v in reflex_vertices(P):
        cr = critical_range(P, v)
        for u in (v - 1, v, v + 1):
            assert not cr.contains_vertex(u % P.n)


def test_critical_range_needs_single_hits():
    P = comb(3)
    with pytest.raises(ValueError):
        for v in reflex_vertices(P):
            critical_range(P, v)


def test_extension_ray_direction():
    P = polygon_from_coords([(0, 0), (4, 0), (4, 4), (2, 1), (0, 4)])
    r = extension_ray(P, 3, 0)
    assert r.origin == Point.of(2, 1)
    # prolongs (4,4)->(2,1) beyond (2,1)
    assert (r.dir.dx, r.dir.dy) == (-2, -3)


def test_ray_hits_literal_and_degenerate():
    P = polygon_from_coords([(0, 0), (4, 0), (4, 4), (2, 1), (0, 4)])
    hits = ray_hits(Ray(Point.of(2, 1), Direction.of(0, -1, oriented=True)), P)
    assert [h.point for h in hits] == [Point.of(2, 0)]
    with pytest.raises(DegenerateOverlap):
        ray_hits(Ray(Point.of(-1, 0), Direction.of(1, 0, oriented=True)), P)


def test_verdict_json():
    v = recognize_2convex(spiky_star(4))
    js = v.to_json()
    assert js["is_two_convex"] is False and js["witness"]["type"] in ("multi_hit_ray", "inner_tangent", "inflection_stabber")


def test_oracle_flag():
    v = recognize_2convex(comb(3), oracle=True)
    assert v.used_oracle and not v.is_two_convex
