"""Candidate lines for arrangement-cell enumeration.

Any quantity that only depends on which side of a line each point of a
finite set lies on (and on the order of crossings along the line) is
constant on the cells of the dual arrangement of that set. Every cell has
an arrangement vertex on its boundary, i.e. a line through two of the
points, so it suffices to visit the cells around each such line. Around a
line carrying collinear points at parameters t_1 < ... < t_c those cells are
reached by the two parallel offsets and by rotations about a parameter
strictly between consecutive t_i, each in both senses.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

from .exactgeom import Direction, Line, Point


def side_values(line: Line, points: Sequence) -> list:
    return [line.side_value(p) for p in points]


def patterns(params: Sequence[Fraction]) -> list[tuple[str, Fraction | None, int]]:
    """Perturbation patterns for the given on-line parameters.

    Returns ``(kind, tau, sense)`` with kind ``"offset"`` or ``"rotate"``.
    """
    ts = sorted(set(params))
    out: list[tuple[str, Fraction | None, int]] = [("offset", None, 1), ("offset", None, -1)]
    for a, b in zip(ts, ts[1:]):
        tau = (a + b) / 2
        out.append(("rotate", tau, 1))
        out.append(("rotate", tau, -1))
    return out


def realize(line: Line, kind: str, tau, sense: int, points: Sequence) -> Line:
    """A concrete line in the cell selected by the pattern.

    The perturbation amount is chosen so that no point of ``points`` off the
    base line changes side; points on the base line land on the side given
    by the pattern.
    """
    dx, dy = line.dir.dx, line.dir.dy
    ax, ay = line.anchor.x, line.anchor.y
    dd = dx * dx + dy * dy

    def g(p):
        return dx * (p[1] - ay) - dy * (p[0] - ax)

    if kind == "offset":
        def h(p):
            return sense * dd
    else:
        def h(p):
            return sense * (dx * (p[0] - ax) + dy * (p[1] - ay) - tau * dd)

    eta = Fraction(1)
    for p in points:
        gv = g(p)
        if gv == 0:
            continue
        hv = h(p)
        if hv == 0:
            continue
        bound = abs(Fraction(gv) / hv) / 2
        if bound < eta:
            eta = bound
    # g + eta*h as a*x + b*y + c
    if kind == "offset":
        a, b = -dy, dx
        c = (dy * ax - dx * ay) + eta * sense * dd
    else:
        a = -dy + eta * sense * dx
        b = dx + eta * sense * dy
        c = (dy * ax - dx * ay) - eta * sense * (dx * ax + dy * ay + tau * dd)
    return Line.from_equation(a, b, -c)


def realize_signs(line: Line, targets: dict, points: Sequence) -> Line:
    """Concrete line giving each on-line point ``points[k]`` the side ``targets[k]``.

    Sides follow the sign convention of ``line.side_value``. The requested
    assignment must be realizable, i.e. constant or a single sign change
    along the line.
    """
    signs = set(targets.values())
    if len(signs) == 1:
        return realize(line, "offset", None, signs.pop(), points)
    order = sorted(targets, key=lambda k: line.param(points[k]))
    seq = [targets[k] for k in order]
    cut = next(i for i in range(1, len(seq)) if seq[i] != seq[i - 1])
    if any(s != seq[0] for s in seq[:cut]) or any(s != seq[cut] for s in seq[cut:]):
        raise ValueError("side assignment is not realizable by a line")
    tau = (line.param(points[order[cut - 1]]) + line.param(points[order[cut]])) / 2
    return realize(line, "rotate", tau, seq[cut], points)


def cell_lines(line: Line, points: Sequence) -> Iterator[Line]:
    """Concrete representatives of every cell around ``line``."""
    on = [line.param(p) for p in points if line.side_value(p) == 0]
    for kind, tau, sense in patterns(on):
        yield realize(line, kind, tau, sense, points)


def candidate_lines(points: Sequence, verticals: bool = True) -> Iterator[Line]:
    """Generic lines covering every cell of the dual arrangement of ``points``.

    A line carrying several points is visited once; its cells cover every
    sign pattern of those points.
    """
    pts = list(dict.fromkeys(Point.of(*p) if not isinstance(p, Point) else p for p in points))
    seen = set()
    for p, q in combinations(pts, 2):
        base = Line.through(p, q)
        key = base.canonical_key()
        if key in seen:
            continue
        seen.add(key)
        yield from cell_lines(base, pts)
    if verticals:
        for p in pts:
            base = Line(p, Direction(0, 1))
            key = base.canonical_key()
            if key in seen:
                continue
            seen.add(key)
            yield from cell_lines(base, pts)
