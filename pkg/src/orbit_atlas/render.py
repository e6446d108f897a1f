"""ASCII and SVG drawings of arc diagrams."""

from __future__ import annotations

from .grassmann import Color, Coloring
from .involutions import HalflinePolicy, Involution, arc_diagram

PITCH = 4  # columns between consecutive vertices in ASCII
SVG_PITCH = 40
SVG_MARGIN = 30

_ASCII_VERTEX = {None: "*", Color.BLACK: "B", Color.GREY: "G", Color.WHITE: "W"}
_SVG_FILL = {None: "black", Color.BLACK: "black", Color.GREY: "#bfbfbf", Color.WHITE: "white"}


def _layout(w: Involution, coloring: Coloring | None):
    if coloring is None:
        d = arc_diagram(w)
    else:
        if coloring.n != w.n:
            raise ValueError("coloring length does not match n")
        d = arc_diagram(w, HalflinePolicy.COLORED_ONLY, coloring.values())
    # shorter arcs sit lower; ties broken by left endpoint
    order = sorted(d.arcs, key=lambda a: (a[1] - a[0], a[0]))
    height = {arc: h for h, arc in enumerate(order, start=1)}
    return d, height


def render_ascii(w: Involution, coloring: Coloring | None = None) -> str:
    """Arcs as horizontal bars on their own row, half-lines to the top."""
    d, height = _layout(w, coloring)
    top = len(d.arcs) + 1
    width = PITCH * (w.n - 1) + 1
    grid = [[" "] * width for _ in range(top + 1)]  # row 0 is the top
    col = lambda i: PITCH * (i - 1)

    for (i, j), h in height.items():
        row = top - h
        for x in range(col(i), col(j) + 1):
            grid[row][x] = "-"
        grid[row][col(i)] = grid[row][col(j)] = "."
    for (i, j), h in height.items():
        for row in range(top - h + 1, top + 1):
            grid[row][col(i)] = grid[row][col(j)] = "|"
    for k in d.halflines:
        for row in range(0, top + 1):
            grid[row][col(k)] = "|"

    lines = ["".join(r).rstrip() for r in grid]
    vertices = [" "] * width
    labels = [" "] * (width + 4)
    for i in range(1, w.n + 1):
        vertices[col(i)] = _ASCII_VERTEX[None if coloring is None else coloring[i]]
        for offset, ch in enumerate(str(i)):
            labels[col(i) + offset] = ch
    lines.append("".join(vertices).rstrip())
    lines.append("".join(labels).rstrip())
    return "\n".join(lines) + "\n"


def render_svg(w: Involution, coloring: Coloring | None = None) -> str:
    """SVG 1.1 drawing with semicircular arcs and a fixed vertex pitch."""
    d, _ = _layout(w, coloring)
    longest = max((j - i for i, j in d.arcs), default=1)
    radius_max = longest * SVG_PITCH / 2
    halfline = max(radius_max + 20, 40)
    base = SVG_MARGIN + halfline
    width = 2 * SVG_MARGIN + SVG_PITCH * (w.n - 1)
    height = base + SVG_MARGIN + 20
    x = lambda i: SVG_MARGIN + SVG_PITCH * (i - 1)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:g}" height="{height:g}" viewBox="0 0 {width:g} {height:g}">',
        f'  <line x1="{x(1) - 15:g}" y1="{base:g}" x2="{x(w.n) + 15:g}" y2="{base:g}" '
        f'stroke="black" stroke-width="1"/>',
    ]
    for i, j in d.arcs:
        r = (x(j) - x(i)) / 2
        out.append(f'  <path d="M {x(i):g} {base:g} A {r:g} {r:g} 0 0 1 {x(j):g} {base:g}" '
                   f'fill="none" stroke="black" stroke-width="1.5"/>')
    for k in d.halflines:
        out.append(f'  <line x1="{x(k):g}" y1="{base:g}" x2="{x(k):g}" y2="{base - halfline:g}" '
                   f'stroke="black" stroke-width="1.5"/>')
    for i in range(1, w.n + 1):
        fill = _SVG_FILL[None if coloring is None else coloring[i]]
        out.append(f'  <circle cx="{x(i):g}" cy="{base:g}" r="4" fill="{fill}" stroke="black"/>')
        out.append(f'  <text x="{x(i):g}" y="{base + 18:g}" font-size="12" '
                   f'text-anchor="middle">{i}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
