"""Deterministic SVG drawings of point sets with an optional tree or path."""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .geometry import PointSet, segments_cross

CANVAS = 800.0
MARGIN = 40.0
EDGE_STYLE = 'stroke="#444444" stroke-width="1.5"'
CROSS_STYLE = 'stroke="#d62728" stroke-width="3"'


def _crossing_edges(ps: PointSet, edges: Sequence[tuple[int, int]]) -> set[int]:
    hit = set()
    for e in range(len(edges)):
        a, b = edges[e]
        for f in range(e + 1, len(edges)):
            c, d = edges[f]
            if segments_cross(ps[a], ps[b], ps[c], ps[d]):
                hit.update((e, f))
    return hit


def render_svg(ps: PointSet, edges: Optional[Iterable[tuple[int, int]]] = None) -> str:
    """SVG 1.1 document: one circle per point, one line per edge, crossing
    edges drawn in red. The bounding box is scaled uniformly onto an
    800x800 canvas with y pointing up."""
    edges = list(edges or [])
    xs = [p.x for p in ps]
    ys = [p.y for p in ps]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    scale = (CANVAS - 2 * MARGIN) / span
    x0, y1 = min(xs), max(ys)

    def sx(x):
        return f"{MARGIN + (x - x0) * scale:.3f}"

    def sy(y):
        return f"{MARGIN + (y1 - y) * scale:.3f}"

    crossing = _crossing_edges(ps, edges)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{CANVAS:.0f}" height="{CANVAS:.0f}" viewBox="0 0 {CANVAS:.0f} {CANVAS:.0f}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    for e, (u, v) in enumerate(edges):
        style = CROSS_STYLE if e in crossing else EDGE_STYLE
        cls = "edge crossing" if e in crossing else "edge"
        lines.append(
            f'<line class="{cls}" x1="{sx(ps[u].x)}" y1="{sy(ps[u].y)}" '
            f'x2="{sx(ps[v].x)}" y2="{sy(ps[v].y)}" {style}/>'
        )
    for i, p in enumerate(ps):
        lines.append(
            f'<circle class="point" id="p{i}" cx="{sx(p.x)}" cy="{sy(p.y)}" r="4" fill="#1f77b4"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
