"""DOT and SVG renderings of a drawing.

Both outputs are purely combinatorial.  DOT lists every edge with its id
and marks crossing edges dashed.  SVG draws the planarization on a fixed
concentric layout: clusters sit on a large circle, the vertices of each
cluster on a small circle around its centre, and every crossing point is
an unfilled square.
"""

from __future__ import annotations

import math
from typing import Sequence

from . import connalg
from .core import OnePlaneDrawing, planarize


def to_dot(drawing: OnePlaneDrawing, name: str = "G") -> str:
    g = drawing.graph
    partner = drawing.partner
    lines = [f"graph {name} {{", "  node [shape=circle, width=0.2, fontsize=8];"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for e, (a, b) in enumerate(g.edges):
        attrs = [f'id="e{e}"', f'label="{e}"']
        if e in partner:
            attrs += ["style=dashed", f'crosses="e{partner[e]}"']
        lines.append(f"  {a} -- {b} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def default_clusters(drawing: OnePlaneDrawing) -> list[list[int]]:
    """Components of the uncrossed subgraph, ordered by smallest vertex."""
    g = drawing.graph
    comps = connalg.components((g.n, g.edges), drawing.noncrossing_edges)
    return sorted((sorted(c) for c in comps), key=lambda c: c[0])


def layout(drawing: OnePlaneDrawing, clusters: Sequence[Sequence[int]] | None = None) -> list[tuple[float, float]]:
    """Positions for the original vertices."""
    clusters = default_clusters(drawing) if clusters is None else [sorted(c) for c in clusters]
    big = max(1.0, len(clusters) / math.pi) * 60.0
    pos: list[tuple[float, float]] = [(0.0, 0.0)] * drawing.graph.n
    for i, cluster in enumerate(clusters):
        ang = 2 * math.pi * i / len(clusters)
        cx, cy = (big * math.cos(ang), big * math.sin(ang)) if len(clusters) > 1 else (0.0, 0.0)
        small = 6.0 + 4.0 * len(cluster)
        for j, v in enumerate(cluster):
            a = 2 * math.pi * j / len(cluster)
            r = small if len(cluster) > 1 else 0.0
            pos[v] = (cx + r * math.cos(a), cy + r * math.sin(a))
    return pos


def to_svg(drawing: OnePlaneDrawing, clusters: Sequence[Sequence[int]] | None = None) -> str:
    pos = layout(drawing, clusters)
    plan = planarize(drawing)
    pg = plan.graph
    n = plan.original_n
    g = drawing.graph
    for c in drawing.crossings:
        ends = [*g.edges[c.first], *g.edges[c.second]]
        pos.append((sum(pos[v][0] for v in ends) / 4, sum(pos[v][1] for v in ends) / 4))
    xs = [p[0] for p in pos] or [0.0]
    ys = [p[1] for p in pos] or [0.0]
    pad = 20.0
    x0, y0 = min(xs) - pad, min(ys) - pad
    w, h = max(xs) - min(xs) + 2 * pad, max(ys) - min(ys) + 2 * pad
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x0:.1f} {y0:.1f} {w:.1f} {h:.1f}" width="{w:.0f}" height="{h:.0f}">',
        '<g stroke="black" stroke-width="1" fill="none">',
    ]
    for a, b in pg.edges:
        (xa, ya), (xb, yb) = pos[a], pos[b]
        out.append(f'<line x1="{xa:.1f}" y1="{ya:.1f}" x2="{xb:.1f}" y2="{yb:.1f}"/>')
    out.append("</g>")
    out.append('<g stroke="black" fill="white">')
    for v in range(pg.n):
        x, y = pos[v]
        if v < n:
            out.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="3" fill="black"><title>v{v}</title></circle>')
        else:
            out.append(f'<rect x="{x - 3:.1f}" y="{y - 3:.1f}" width="6" height="6"><title>crossing {v - n}</title></rect>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
