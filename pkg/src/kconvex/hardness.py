"""3SUM reduction to the stabbing number of a polygon.

Integers become points p_x = (x, x^3) on the cubic; three distinct ones are
collinear exactly when they sum to zero. P1 threads the points in x order
and closes with a corner below; P2 replaces each point by a thin vertical
slot, so a line meets three slots only when their tops are collinear, which
raises the stabbing number of P2.
"""
from __future__ import annotations

import bisect
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .exactgeom import (
    CollinearRun,
    Point,
    Polygon,
    orient_value,
    segments_intersect,
    signed_area2,
    validate_polygon,
)
from .stabbing import stabbing_number


class EarlyExit(Exception):
    """The duplicate checks already decided the instance."""

    def __init__(self, reason: str, answer: bool):
        super().__init__(reason)
        self.reason = reason
        self.answer = answer


class CalibrationFailure(RuntimeError):
    pass


class ThresholdGap(RuntimeError):
    """Observed stabbing number falls strictly between the calibrated values."""


def three_sum_brute(xs) -> bool:
    xs = list(xs)
    return any(xs[i] + xs[j] + xs[k] == 0 for i, j, k in itertools.combinations(range(len(xs)), 3))


def cubic(x) -> Point:
    x = Fraction(x)
    return Point(x, x**3)


@dataclass
class ReductionInstance:
    input: list[int]
    dedup_sorted: list[int] = field(default_factory=list)
    m: int = 0
    M: int = 0
    epsilon: Fraction = Fraction(0)
    P1: Optional[Polygon] = None
    P2: Optional[Polygon] = None
    early_exit: Optional[str] = None
    early_answer: Optional[bool] = None

    def to_json(self) -> dict:
        out = {
            "input": self.input,
            "dedup_sorted": self.dedup_sorted,
            "m": self.m,
            "M": self.M,
            "epsilon": str(self.epsilon),
            "early_exit": self.early_exit,
        }
        if self.P1 is not None:
            out["P1"] = self.P1.to_json()
        if self.P2 is not None:
            out["P2"] = self.P2.to_json()
        return out


def _prepare(xs) -> ReductionInstance:
    """Sort, run both duplicate checks, deduplicate."""
    inst = ReductionInstance(list(xs))
    L = sorted(int(x) for x in xs)
    if L.count(0) >= 3:
        inst.early_exit, inst.early_answer = "zero appears three times", True
        return inst
    for a in sorted(set(L)):
        if a != 0 and L.count(a) >= 2:
            j = bisect.bisect_left(L, -2 * a)
            if j < len(L) and L[j] == -2 * a:
                inst.early_exit, inst.early_answer = f"{a} repeated and {-2 * a} present", True
                return inst
    if not L:
        inst.early_exit, inst.early_answer = "empty input", False
        return inst
    a = sorted(set(L))
    inst.dedup_sorted = a
    inst.m, inst.M = a[0] - 1, a[-1] + 1
    inst.epsilon = Fraction(1, 6 * (inst.M - inst.m))
    return inst


def _simple_polygon(pts: list[Point]) -> Polygon:
    """Validate, tolerating straight vertices (P1 has them on yes-instances)."""
    try:
        return validate_polygon(pts)
    except CollinearRun:
        pass
    n = len(pts)
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            if segments_intersect(a, b, pts[j], pts[(j + 1) % n]):
                raise ValueError(f"edges {i} and {j} intersect")
    if signed_area2(pts) < 0:
        pts = pts[::-1]
    return Polygon(tuple(pts))


def _raise_if_exit(inst: ReductionInstance) -> None:
    if inst.early_exit is not None:
        raise EarlyExit(inst.early_exit, inst.early_answer)


def build_P1(xs) -> ReductionInstance:
    inst = _prepare(xs)
    _raise_if_exit(inst)
    m, M = inst.m, inst.M
    q = Point(Fraction(M), Fraction(m) ** 3)
    # listed clockwise; validation turns it counterclockwise
    pts = [cubic(m)] + [cubic(a) for a in inst.dedup_sorted] + [cubic(M), q]
    inst.P1 = _simple_polygon(pts)
    return inst


def slot(x, eps: Fraction, foot: Fraction | None = None) -> tuple[Point, Point, Point]:
    """Left foot u_x, bottom p'_x and right foot v_x of the slot at x."""
    x = Fraction(x)
    e2 = eps * eps if foot is None else foot
    return cubic(x - e2), Point(x, x**3 - eps), cubic(x + e2)


def foot_offset(inst: ReductionInstance) -> Fraction:
    """Horizontal half-width of a slot opening.

    A line through a slot of depth eps at slope s crosses both of its legs
    only if |s - 3x^2| * foot < eps; along a zero-sum line that slope gap
    reaches (M - m)^2, so eps^2 is too wide once the input is spread out.
    """
    return min(inst.epsilon**2, inst.epsilon / (2 * (inst.M - inst.m) ** 2))


def bridge_x(a: int, b: int) -> Fraction:
    """Abscissa of the cubic vertex inserted between the slots at a < b.

    The midpoint, unless it would make the bridge collinear with the
    neighbouring slot feet (their abscissae would sum to zero).
    """
    w = Fraction(a + b, 2)
    if a + b + w == 0:
        w += Fraction(1, 4)
    return w


def build_P2(xs, verbatim: bool = False) -> ReductionInstance:
    """Slotted polygon P2.

    With ``verbatim`` the slots have feet at distance eps^2 and consecutive
    slots are joined by a straight edge (3t + 3 vertices). By default a
    vertex on the cubic is inserted between consecutive slots, so a line
    below three collinear slot tops still crosses the chain between the
    two right-hand ones, and the feet shrink with the input spread.
    """
    inst = build_P1(xs)
    m, M, eps = inst.m, inst.M, inst.epsilon
    foot = None if verbatim else foot_offset(inst)
    pts = [cubic(m)]
    a = inst.dedup_sorted
    for i, x in enumerate(a):
        if i and not verbatim:
            pts.append(cubic(bridge_x(a[i - 1], x)))
        pts.extend(slot(x, eps, foot))
    pts += [cubic(M), Point(Fraction(M), Fraction(m) ** 3)]
    inst.P2 = validate_polygon(pts)
    return inst


def slot_probe(inst: ReductionInstance, a: int) -> tuple[int, int]:
    """Crossings of one probe line with P2 with the slot at ``a`` filled, then open.

    The probe runs from just above the chain vertex preceding the slot to
    the middle of the slot, so it crosses the chain once next to the slot
    and then both walls of the slot: one crossing becomes three.
    """
    from .exactgeom import Line
    from .stabbing import crossing_count

    P2 = inst.P2
    x = Fraction(a)
    k = next(i for i, v in enumerate(P2.vertices) if v.x == x and v.y == x**3 - inst.epsilon)
    # counterclockwise order runs right to left along the chain, so the
    # chain vertex left of the slot is two steps past its bottom
    w = P2[k + 2]
    L = Line.through(Point(w.x, w.y + inst.epsilon**4), Point(x, x**3 - inst.epsilon / 2))
    filled = Polygon(P2.vertices[:k] + P2.vertices[k + 1:])
    return crossing_count(L, filled), crossing_count(L, P2)


@dataclass(frozen=True)
class CalibratedThresholds:
    stab_yes: int
    stab_no: int

    def to_json(self) -> dict:
        return {"stab_yes": self.stab_yes, "stab_no": self.stab_no}


YES_INSTANCE = (-3, 1, 2)
NO_INSTANCE = (1, 2, 4)


@lru_cache(maxsize=None)
def calibrate_thresholds() -> CalibratedThresholds:
    yes = stabbing_number(build_P2(YES_INSTANCE).P2).value
    no = stabbing_number(build_P2(NO_INSTANCE).P2).value
    if yes <= no:
        raise CalibrationFailure(f"yes-instance gives {yes}, no-instance gives {no}")
    return CalibratedThresholds(yes, no)


def decide_3sum_geometric(xs, thresholds: CalibratedThresholds | None = None) -> bool:
    inst = _prepare(xs)
    if inst.early_exit is not None:
        return bool(inst.early_answer)
    th = thresholds or calibrate_thresholds()
    value = stabbing_number(build_P2(xs).P2).value
    if value >= th.stab_yes:
        return True
    if value <= th.stab_no:
        return False
    raise ThresholdGap(f"stabbing number {value} between {th.stab_no} and {th.stab_yes}")


def cubic_collinear(a: int, b: int, c: int) -> bool:
    return orient_value(cubic(a), cubic(b), cubic(c)) == 0


def slots_stabbable(a: int, b: int, c: int, eps: Fraction | None = None) -> bool:
    """Whether one line meets the three closed vertical segments from (t, t^3 - eps) to (t, t^3).

    If any line stabs them, one through two segment endpoints does, so the
    endpoint pairs are the only candidates. ``eps`` defaults to
    1 / (6 (M - m)) with m = min - 1 and M = max + 1.
    """
    ts = sorted({a, b, c})
    if len(ts) < 3:
        raise ValueError("need three distinct abscissae")
    if eps is None:
        eps = Fraction(1, 6 * (ts[-1] - ts[0] + 2))
    segs = {t: (Fraction(t) ** 3 - eps, Fraction(t) ** 3) for t in ts}
    ends = [(t, y) for t in ts for y in segs[t]]
    for (t1, y1), (t2, y2) in itertools.combinations(ends, 2):
        if t1 == t2:
            continue
        slope = (y2 - y1) / (t2 - t1)
        if all(segs[t][0] <= y1 + slope * (t - t1) <= segs[t][1] for t in ts):
            return True
    return False
