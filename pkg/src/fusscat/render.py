"""Plain SVG drawings of polygons, Shi tableaux and staircase partitions.

Output is assembled from formatted strings with fixed precision, so equal
inputs give byte-identical files.
"""
from __future__ import annotations

import math
from typing import Optional

from .dissections import Dissection, LabeledPolygon, snake_diagonals
from .partitions import StaircasePartition
from .shi import ShiTableau

SNAKE = "#c0392b"
INK = "#222222"
GRID = "#888888"


def _f(x: float) -> str:
    s = f"{x:.2f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _svg(width: float, height: float, body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(width)}" height="{_f(height)}" '
        f'viewBox="0 0 {_f(width)} {_f(height)}">'
    )
    return "\n".join([head, f'<rect width="100%" height="100%" fill="white"/>', *body, "</svg>"]) + "\n"


def _text(x, y, s, size=12, anchor="middle", fill=INK):
    return (
        f'<text x="{_f(x)}" y="{_f(y)}" font-family="sans-serif" font-size="{size}" '
        f'text-anchor="{anchor}" dominant-baseline="central" fill="{fill}">{s}</text>'
    )


def polygon_svg(poly: LabeledPolygon, dissection: Optional[Dissection] = None,
                size: float = 360.0) -> str:
    """Vertices on a circle by ccw position, position 0 at the bottom.

    Snake diagonals are drawn in red (dashed when the dissection does not
    use them); dissection diagonals in black.
    """
    count = poly.vertex_count
    c = size / 2
    r = size / 2 - 30

    def xy(pos):
        theta = -math.pi / 2 + 2 * math.pi * pos / count
        return c + r * math.cos(theta), c - r * math.sin(theta)

    body = []
    pts = " ".join(f"{_f(x)},{_f(y)}" for x, y in map(xy, range(count)))
    body.append(f'<polygon points="{pts}" fill="none" stroke="{INK}" stroke-width="1.5"/>')
    used = dissection.diagonals if dissection is not None else frozenset()
    snake = snake_diagonals(poly)
    for i, (a, b) in enumerate(snake, start=1):
        (x1, y1), (x2, y2) = xy(poly.position(a)), xy(poly.position(b))
        dash = "" if dissection is None or (a, b) in used else ' stroke-dasharray="5,4"'
        body.append(
            f'<line x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}" '
            f'stroke="{SNAKE}" stroke-width="2"{dash}><title>-a{i}</title></line>'
        )
    for a, b in sorted(used - set(snake)):
        (x1, y1), (x2, y2) = xy(poly.position(a)), xy(poly.position(b))
        body.append(
            f'<line x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}" '
            f'stroke="{INK}" stroke-width="1.5"/>'
        )
    for pos in range(count):
        x, y = xy(pos)
        body.append(f'<circle cx="{_f(x)}" cy="{_f(y)}" r="3" fill="{INK}"/>')
        theta = -math.pi / 2 + 2 * math.pi * pos / count
        lx, ly = c + (r + 16) * math.cos(theta), c - (r + 16) * math.sin(theta)
        body.append(_text(lx, ly, str(poly.label(pos))))
    return _svg(size, size, body)


def tableau_svg(t: ShiTableau, cell: float = 36.0) -> str:
    """Staircase of boxes with ``k_{i,j}`` in box ``(i, n-j+1)``."""
    n = t.n
    pad = 10
    body = []
    for r in range(1, n + 1):
        for col in range(1, n - r + 2):
            x, y = pad + (col - 1) * cell, pad + (r - 1) * cell
            body.append(
                f'<rect x="{_f(x)}" y="{_f(y)}" width="{_f(cell)}" height="{_f(cell)}" '
                f'fill="none" stroke="{INK}"/>'
            )
            body.append(_text(x + cell / 2, y + cell / 2, str(t.box(r, col)), size=14))
    side = 2 * pad + n * cell
    return _svg(side, side, body)


def partition_svg(p: StaircasePartition, cell: float = 18.0) -> str:
    """Young diagram of ``p`` (filled) inside the outline of the m-staircase."""
    n, m = p.n, p.m
    pad = 10
    body = []
    for r in range(1, n + 1):
        y = pad + (r - 1) * cell
        for col in range(m * (n - r + 1)):
            x = pad + col * cell
            fill = "#9ecae1" if col < p[r] else "none"
            body.append(
                f'<rect x="{_f(x)}" y="{_f(y)}" width="{_f(cell)}" height="{_f(cell)}" '
                f'fill="{fill}" stroke="{GRID}" stroke-width="0.75"/>'
            )
    # staircase outline
    path = [f"M {_f(pad)} {_f(pad)}"]
    for r in range(1, n + 1):
        x = pad + m * (n - r + 1) * cell
        path.append(f"H {_f(x)} V {_f(pad + r * cell)}")
    path.append(f"H {_f(pad)} Z")
    body.append(f'<path d="{" ".join(path)}" fill="none" stroke="{INK}" stroke-width="2"/>')
    return _svg(2 * pad + m * n * cell, 2 * pad + n * cell, body)


def render(obj) -> str:
    if isinstance(obj, Dissection):
        return polygon_svg(obj.polygon, obj)
    if isinstance(obj, LabeledPolygon):
        return polygon_svg(obj)
    if isinstance(obj, ShiTableau):
        return tableau_svg(obj)
    if isinstance(obj, StaircasePartition):
        return partition_svg(obj)
    raise TypeError(f"cannot render {type(obj).__name__}")
