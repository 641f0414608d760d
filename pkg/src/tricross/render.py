"""SVG rendering of planarized drawings.

Positions come from a straight-line grid drawing of the planarized graph that
follows the certificate's rotation system (possibly mirrored), so each
original edge appears as a polyline bending only at its crossings.
"""

from __future__ import annotations

from xml.sax.saxutils import quoteattr

import networkx as nx

from .drawing import PlanarizedDrawing

PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22"]


def layout(dr: PlanarizedDrawing) -> dict[int, tuple[float, float]]:
    m = dr.map
    n = dr.n_planarized
    if n == 1:
        return {0: (0.0, 0.0)}
    if m.components() != 1:
        raise ValueError("can only render connected drawings")
    if n == 2:
        return {0: (0.0, 0.0), 1: (1.0, 0.0)}
    emb = nx.PlanarEmbedding()
    emb.set_data({v: m.neighbor_rotation(v) for v in range(n)})
    pos = nx.combinatorial_embedding_to_pos(emb)
    return {v: (float(x), float(y)) for v, (x, y) in pos.items()}


def render_svg(dr: PlanarizedDrawing, scale: float = 48.0, margin: float = 30.0) -> str:
    pos = layout(dr)
    p = dr.base.p
    xs = [x for x, _ in pos.values()]
    ys = [y for _, y in pos.values()]
    width = (max(xs) - min(xs)) * scale + 2 * margin
    height = (max(ys) - min(ys)) * scale + 2 * margin

    def at(v):
        x, y = pos[v]
        return (x - min(xs)) * scale + margin, height - ((y - min(ys)) * scale + margin)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}" '
           f'viewBox="0 0 {width:.0f} {height:.0f}">',
           f"<title>{dr.base.label()}, {dr.k} crossing point(s)</title>",
           '<g class="segments" stroke-width="2" stroke-linecap="round">']
    for s, (a, b) in enumerate(dr.map.segments):
        e = dr.structure.seg_owner[s]
        (x1, y1), (x2, y2) = at(a), at(b)
        out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
                   f'stroke="{PALETTE[e % len(PALETTE)]}" data-edge="{e}" data-from="{a}" data-to="{b}"/>')
    out.append("</g>")
    out.append('<g class="vertices" font-family="sans-serif" font-size="11" text-anchor="middle">')
    for v in range(p):
        x, y = at(v)
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="9" fill="white" stroke="black" data-vertex="{v}"/>')
        out.append(f'<text x="{x:.2f}" y="{y + 4:.2f}">{v}</text>')
    out.append("</g>")
    out.append(f"<desc>{quoteattr(dr.base.label())[1:-1]}</desc>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
