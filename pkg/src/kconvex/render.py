"""Deterministic SVG drawings of polygons with line, segment and point overlays.

Coordinates are rounded to 6 decimals for drawing only; y points up.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence
from xml.sax.saxutils import escape

from .exactgeom import Line, Polygon

PALETTE = ("#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948", "#b07aa1", "#ff9da7", "#9c755f")


@dataclass
class RenderSpec:
    polygons: Sequence[Polygon]
    lines: Sequence[Line] = ()
    segments: Sequence[tuple] = ()
    points: Sequence[tuple] = ()  # (x, y) or (x, y, label)
    labels: Sequence[str] = ()
    highlight: Sequence[Sequence[int]] = field(default_factory=list)  # vertex groups of polygons[0]
    size: int = 600


def _f(v) -> str:
    s = f"{float(v):.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _clip(L: Line, box) -> tuple | None:
    """Segment of L inside the box (floats), or None."""
    x0, y0, x1, y1 = box
    ax, ay = float(L.anchor.x), float(L.anchor.y)
    dx, dy = float(L.dir.dx), float(L.dir.dy)
    lo, hi = -float("inf"), float("inf")
    for p, d, a, b in ((ax, dx, x0, x1), (ay, dy, y0, y1)):
        if d == 0:
            if not a <= p <= b:
                return None
            continue
        t1, t2 = (a - p) / d, (b - p) / d
        lo, hi = max(lo, min(t1, t2)), min(hi, max(t1, t2))
    if lo > hi:
        return None
    return (ax + lo * dx, ay + lo * dy), (ax + hi * dx, ay + hi * dy)


def render(spec: RenderSpec) -> str:
    xs = [float(v.x) for P in spec.polygons for v in P.vertices] + [float(p[0]) for p in spec.points]
    ys = [float(v.y) for P in spec.polygons for v in P.vertices] + [float(p[1]) for p in spec.points]
    if not xs:
        xs, ys = [0.0, 1.0], [0.0, 1.0]
    w = max(xs) - min(xs) or 1.0
    h = max(ys) - min(ys) or 1.0
    pad = 0.05 * max(w, h)
    box = (min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad)
    vw, vh = box[2] - box[0], box[3] - box[1]
    scale = max(vw, vh)
    stroke = _f(scale / 400)

    def pt(x, y) -> str:
        return f"{_f(x)},{_f(-float(y))}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{spec.size}" '
        f'height="{int(spec.size * vh / vw)}" viewBox="{_f(box[0])} {_f(-box[3])} {_f(vw)} {_f(vh)}">',
    ]
    for i, P in enumerate(spec.polygons):
        color = PALETTE[i % len(PALETTE)]
        pts = " ".join(pt(v.x, v.y) for v in P.vertices)
        out.append(
            f'<polygon points="{pts}" fill="{color}" fill-opacity="0.25" stroke="{color}" '
            f'stroke-width="{stroke}"/>'
        )
        if i < len(spec.labels):
            v = P.vertices[0]
            out.append(f'<text x="{_f(v.x)}" y="{_f(-float(v.y))}" font-size="{_f(scale / 30)}">'
                       f"{escape(spec.labels[i])}</text>")
    if spec.polygons:
        P = spec.polygons[0]
        for g, group in enumerate(spec.highlight):
            color = PALETTE[(g + 1) % len(PALETTE)]
            pts = " ".join(pt(P[j].x, P[j].y) for j in group)
            out.append(f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="{_f(scale / 150)}"/>')
    for L in spec.lines:
        seg = _clip(L, box)
        if seg is None:
            continue
        (x1, y1), (x2, y2) = seg
        out.append(
            f'<line x1="{_f(x1)}" y1="{_f(-y1)}" x2="{_f(x2)}" y2="{_f(-y2)}" stroke="#d62728" '
            f'stroke-width="{stroke}"/>'
        )
    for a, b in spec.segments:
        out.append(
            f'<line x1="{_f(a[0])}" y1="{_f(-float(a[1]))}" x2="{_f(b[0])}" y2="{_f(-float(b[1]))}" '
            f'stroke="#333333" stroke-width="{stroke}"/>'
        )
    r = _f(scale / 150)
    for p in spec.points:
        out.append(f'<circle cx="{_f(p[0])}" cy="{_f(-float(p[1]))}" r="{r}" fill="#000000"/>')
        if len(p) > 2:
            out.append(f'<text x="{_f(p[0])}" y="{_f(-float(p[1]))}" font-size="{_f(scale / 30)}">'
                       f"{escape(str(p[2]))}</text>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
