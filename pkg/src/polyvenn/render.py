"""Deterministic SVG rendering of polygon families and their face census."""

from __future__ import annotations

from fractions import Fraction

from .arrangement import Arrangement, PolygonFamily, build
from .geometry import Point

STROKES = ["#c0392b", "#2980b9", "#27ae60", "#8e44ad", "#d35400",
           "#16a085", "#7f8c8d", "#2c3e50", "#a04000", "#1a5276"]


def _fmt(value) -> str:
    return f"{float(value):.6g}"


def _path(points: list[Point], transform) -> str:
    cmds = []
    for idx, p in enumerate(points):
        x, y = transform(p)
        cmds.append(f"{'M' if idx == 0 else 'L'}{_fmt(x)},{_fmt(y)}")
    cmds.append("Z")
    return " ".join(cmds)


def render_svg(family: PolygonFamily, *, shade: bool = False,
               size: int = 640) -> str:
    """One closed path per polygon, distinct stroke per curve; with shading,
    bounded faces are filled by sign-vector weight."""
    xs = [c.x for p in family.polygons for c in p.corners]
    ys = [c.y for p in family.polygons for c in p.corners]
    lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
    span = max(hi_x - lo_x, hi_y - lo_y, Fraction(1, 1000))
    margin = span / 12

    def transform(p: Point) -> tuple[float, float]:
        sx = float((p.x - lo_x + margin) / (span + 2 * margin)) * size
        sy = float((hi_y - p.y + margin) / (span + 2 * margin)) * size
        return sx, sy

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
        f'height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]

    arrangement: Arrangement | None = None
    if shade:
        arrangement = build(family)
        n = family.n
        for face in arrangement.faces:
            if face.is_outer or face.outer_cycle is None:
                continue
            weight = face.sign.weight
            shade_level = 0.92 - 0.72 * weight / max(n, 1)
            grey = int(255 * shade_level)
            fill = f"rgb({grey},{grey},{255 - (255 - grey) // 2})"
            d = [_path(arrangement.cycle_points[face.outer_cycle], transform)]
            for hole in face.holes:
                d.append(_path(arrangement.cycle_points[hole], transform))
            lines.append(f'<path d="{" ".join(d)}" fill="{fill}" '
                         f'fill-rule="evenodd" stroke="none">'
                         f'<title>{face.sign.as_string()}</title></path>')

    for idx, poly in enumerate(family.polygons):
        stroke = STROKES[idx % len(STROKES)]
        d = _path(list(poly.corners), transform)
        lines.append(f'<path d="{d}" fill="none" stroke="{stroke}" '
                     f'stroke-width="2" data-curve="{poly.label}"/>')

    lines.append("</svg>")
    return "\n".join(lines) + "\n"
