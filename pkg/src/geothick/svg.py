"""Deterministic SVG 1.1 rendering of layered drawings.

Layers are told apart by dash pattern first and colour second, so prints in
greyscale stay readable.  Singletons are circles, k-sets triangles.
"""
from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .drawings import LayeredDrawing
from .graphs import IncidenceGraph

DASHES = ("", "8,4", "2,3", "10,3,2,3", "1,6", "12,6")
COLORS = ("#1f4e79", "#b03a2e", "#1e8449", "#7d3c98", "#b9770e", "#566573")


def _fmt(v: float) -> str:
    return f"{v:.3f}".rstrip("0").rstrip(".")


def _schematic(points: list[tuple[float, float]]) -> list[tuple[float, float]]:
    """Compress radii logarithmically so far-out vertices share the canvas with a small cluster.

    Edges are redrawn straight between moved endpoints, so the picture is a
    schematic: crossings it shows need not match the exact drawing.
    """
    out = []
    for x, y in points:
        r = math.hypot(x, y)
        f = math.log1p(r) / r if r else 0.0
        out.append((x * f, y * f))
    return out


def render_svg(d: LayeredDrawing, size: float = 600.0, margin: float = 20.0,
               mark: float = 4.0, labels: bool = False, schematic: bool = False) -> str:
    """SVG text for ``d``, fit into a ``size`` x ``size`` canvas."""
    if labels:
        margin += 30
    pts = [(float(p.x), float(p.y)) for p in d.coords]
    if schematic:
        pts = _schematic(pts)
    xs = [x for x, _ in pts] or [0.0]
    ys = [y for _, y in pts] or [0.0]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    k = (size - 2 * margin) / span
    x0, y1 = min(xs), max(ys)

    def sx(x: float) -> float:
        return margin + (x - x0) * k

    def sy(y: float) -> float:
        return margin + (y1 - y) * k  # screen y grows downward

    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(size)}" '
           f'height="{_fmt(size)}" viewBox="0 0 {_fmt(size)} {_fmt(size)}">',
           '<rect width="100%" height="100%" fill="white"/>']
    for layer in sorted(set(d.layers)):
        dash = DASHES[layer % len(DASHES)]
        style = f'stroke="{COLORS[layer % len(COLORS)]}" stroke-width="1"'
        if dash:
            style += f' stroke-dasharray="{dash}"'
        out.append(f'<g id="layer{layer}" fill="none" {style}>')
        for e, (u, v) in enumerate(d.graph.edges):
            if d.layers[e] != layer:
                continue
            (ax, ay), (bx, by) = pts[u], pts[v]
            out.append(f'<line x1="{_fmt(sx(ax))}" y1="{_fmt(sy(ay))}" '
                       f'x2="{_fmt(sx(bx))}" y2="{_fmt(sy(by))}"/>')
        out.append('</g>')

    g = d.graph
    out.append('<g id="vertices" stroke="black" stroke-width="1">')
    for v, (px, py) in enumerate(pts):
        cx, cy = sx(px), sy(py)
        single = not isinstance(g, IncidenceGraph) or g.is_singleton(v)
        if single:
            out.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(mark)}" fill="white"/>')
        else:
            tri = [(cx, cy - mark), (cx + 0.87 * mark, cy + 0.5 * mark), (cx - 0.87 * mark, cy + 0.5 * mark)]
            coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in tri)
            out.append(f'<polygon points="{coords}" fill="black"/>')
        if labels:
            text = repr(g.vertices[v]) if isinstance(g, IncidenceGraph) else str(v)
            out.append(f'<text x="{_fmt(cx + mark + 1)}" y="{_fmt(cy - mark - 1)}" '
                       f'font-size="9" stroke="none">{escape(text)}</text>')
    out.append('</g>')
    out.append('</svg>')
    return "\n".join(out) + "\n"
