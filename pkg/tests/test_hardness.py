import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kconvex.hardness import (
    EarlyExit,
    NO_INSTANCE,
    YES_INSTANCE,
    build_P1,
    build_P2,
    calibrate_thresholds,
    cubic_collinear,
    decide_3sum_geometric,
    slot_probe,
    slots_stabbable,
    three_sum_brute,
)
from kconvex.stabbing import is_k_convex, stabbing_number


def test_brute():
    assert three_sum_brute([1, 2, -3])
    assert not three_sum_brute([1, 2, 4])
    assert three_sum_brute([0, 0, 0])
    assert not three_sum_brute([0, 0])


def test_cubic_collinearity_iff_zero_sum():
    for a, b, c in itertools.combinations(range(-20, 21), 3):
        assert cubic_collinear(a, b, c) == (a + b + c == 0)


@pytest.mark.parametrize("seed", range(5))
def test_slot_stabbing_iff_collinear(seed):
    rng = random.Random(seed)
    for _ in range(20):
        a, b, c = rng.sample(range(-12, 13), 3)
        assert slots_stabbable(a, b, c) == (a + b + c == 0)


def test_early_exits():
    with pytest.raises(EarlyExit):
        build_P1([0, 0, 0])
    with pytest.raises(EarlyExit):
        build_P1([5, 5, -10])
    assert decide_3sum_geometric([5, 5, -10])
    assert decide_3sum_geometric([0, 3, 0, 0])


def test_p1_sizes_and_stabbing():
    inst = build_P1([-2, 0, 1, 3])
    assert inst.P1.n == 7
    assert stabbing_number(inst.P1).value == 4
    assert build_P1([1]).P1.n == 4


def test_epsilon_formula():
    inst = build_P2([-2, 0, 1, 3])
    assert (inst.m, inst.M) == (-3, 4)
    assert inst.epsilon * 6 * (inst.M - inst.m) == 1


def test_verbatim_p2_vertex_count():
    inst = build_P2([1, 2, 4], verbatim=True)
    assert inst.P2.n == 3 * 3 + 3


def test_bridged_p2_vertex_count():
    assert build_P2([1, 2, 4]).P2.n == 4 * 3 + 2


@pytest.mark.parametrize("xs", [YES_INSTANCE, NO_INSTANCE, (-10, 3, 7, 1, -2, 5)])
def test_each_slot_adds_two_local_crossings(xs):
    inst = build_P2(xs)
    for a in inst.dedup_sorted:
        p1, p2 = slot_probe(inst, a)
        assert p2 == p1 + 2


def test_calibration_values():
    th = calibrate_thresholds()
    # DERIVED: exact stabbing numbers of the generated slot polygons
    assert (th.stab_yes, th.stab_no) == (10, 8)


@pytest.mark.parametrize("xs", [(-3, 1, 2), (-5, 2, 3), (-1, 0, 1)])
def test_yes_value_stable(xs):
    assert stabbing_number(build_P2(xs).P2).value == calibrate_thresholds().stab_yes


def test_verbatim_construction_collapses_on_yes_instance():
    # recorded deviation: without bridge vertices the yes-instance reads as no
    assert stabbing_number(build_P2(YES_INSTANCE, verbatim=True).P2).value == 8


def test_four_convexity_decides():
    assert not is_k_convex(build_P2(YES_INSTANCE).P2, 4)
    assert is_k_convex(build_P2(NO_INSTANCE).P2, 4)


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=7))
def test_geometric_decision_matches_brute(xs):
    assert decide_3sum_geometric(xs) == three_sum_brute(xs)


@pytest.mark.slow
def test_decision_matches_brute_on_longer_lists():
    rng = random.Random(12)
    for _ in range(200):
        xs = [rng.randint(-30, 30) for _ in range(rng.randint(1, 12))]
        assert decide_3sum_geometric(xs) == three_sum_brute(xs), xs
