from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from kconvex.exactgeom import polygon_from_coords
from kconvex.fixtures import random_simple_polygon, standard_corpus
from kconvex.twoconvex import recognize_2convex

settings.register_profile(
    "seeded",
    derandomize=True,
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("seeded")


@pytest.fixture(scope="session")
def corpus():
    return standard_corpus()


@pytest.fixture(scope="session")
def two_convex_corpus(corpus):
    return [(name, P) for name, P in corpus if recognize_2convex(P).is_two_convex]


@pytest.fixture
def square():
    return polygon_from_coords([(0, 0), (1, 0), (1, 1), (0, 1)])


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
points = st.tuples(rationals, rationals)


@st.composite
def random_polygons(draw, min_n=4, max_n=24):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 10_000))
    return random_simple_polygon(n, seed)


def frac(s) -> Fraction:
    return Fraction(s)


_criteria_key = pytest.StashKey[list]()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion n")
    config.stash[_criteria_key] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (rep.when != "call" and rep.passed):
        return
    detail = dict(item.user_properties).get("detail", "")
    item.config.stash[_criteria_key].append((mark.args[0], mark.args[1], rep.passed, detail))


def pytest_terminal_summary(terminalreporter, config):
    rows = sorted(config.stash.get(_criteria_key, []))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for n, title, ok, detail in rows:
        line = f"criterion {n:>2} {'PASS' if ok else 'FAIL'}  {title}"
        terminalreporter.write_line(line + (f"  [{detail}]" if detail else ""))
