"""Deterministic SVG 1.1 rendering of solved instances: colored lines
with shaded solution triangles and the witness point, or colored circle
points with middle points and the middle-point arc highlighted."""

from __future__ import annotations

import math
from typing import Union

from .circle import CircleSolution
from .lines import LineSolution, triangle_vertices

COLOR_CSS = {1: "red", 2: "blue", 3: "green", 4: "orange"}


def _fmt(x: float) -> str:
    return f"{x:.4f}"


def _svg(width: float, height: float, viewbox: str, body: list[str]) -> str:
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" viewBox="{viewbox}">'
    )
    return "\n".join([head] + body + ["</svg>"]) + "\n"


def _clip_line(a: float, b: float, c: float, box: tuple[float, float, float, float]):
    # Liang-Barsky clip of the infinite line a*x + b*y = c to the box.
    x0, y0, x1, y1 = box
    norm = a * a + b * b
    bx = a * c / norm
    by = b * c / norm
    dx, dy = -b, a
    tmin, tmax = -1e18, 1e18
    for d, base, lo, hi in ((dx, bx, x0, x1), (dy, by, y0, y1)):
        if abs(d) < 1e-12:
            if base < lo or base > hi:
                return None
            continue
        t_lo = (lo - base) / d
        t_hi = (hi - base) / d
        if t_lo > t_hi:
            t_lo, t_hi = t_hi, t_lo
        tmin = max(tmin, t_lo)
        tmax = min(tmax, t_hi)
    if tmin >= tmax:
        return None
    return (bx + tmin * dx, by + tmin * dy, bx + tmax * dx, by + tmax * dy)


def render_lines_svg(solution: LineSolution) -> str:
    inst = solution.instance
    pts = [(float(x), float(y)) for x, y in [solution.witness]]
    triangles = []
    for triple in solution.triples:
        verts = triangle_vertices([inst.lines[i] for i in triple])
        fverts = [(float(x), float(y)) for x, y in verts]
        triangles.append(fverts)
        pts.extend(fverts)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    pad = 0.25 * max(max(xs) - min(xs), max(ys) - min(ys), 1.0)
    box = (min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad)
    width = box[2] - box[0]
    height = box[3] - box[1]
    scale = 480.0 / max(width, height)

    def tx(x: float) -> float:
        return (x - box[0]) * scale

    def ty(y: float) -> float:
        return (box[3] - y) * scale  # flip: SVG y grows downward

    body = []
    for fverts in triangles:
        points_attr = " ".join(f"{_fmt(tx(x))},{_fmt(ty(y))}" for x, y in fverts)
        body.append(
            f'<polygon points="{points_attr}" fill="gray" fill-opacity="0.3" stroke="none"/>'
        )
    for idx, line in enumerate(inst.lines):
        seg = _clip_line(float(line.ia), float(line.ib), float(line.ic), box)
        if seg is None:
            continue
        color = COLOR_CSS[inst.coloring.class_of[idx]]
        body.append(
            f'<line x1="{_fmt(tx(seg[0]))}" y1="{_fmt(ty(seg[1]))}" '
            f'x2="{_fmt(tx(seg[2]))}" y2="{_fmt(ty(seg[3]))}" '
            f'stroke="{color}" stroke-width="1.5"/>'
        )
    wx, wy = float(solution.witness[0]), float(solution.witness[1])
    body.append(
        f'<circle class="witness" cx="{_fmt(tx(wx))}" cy="{_fmt(ty(wy))}" '
        f'r="4" fill="black"/>'
    )
    w = width * scale
    h = height * scale
    return _svg(w, h, f"0 0 {_fmt(w)} {_fmt(h)}", body)


def _unit(point) -> tuple[float, float]:
    x, y = float(point.dx), float(point.dy)
    n = math.hypot(x, y)
    return (x / n, y / n)


def render_circle_svg(solution: CircleSolution) -> str:
    inst = solution.instance
    ann = solution.annotated
    scale = 200.0

    def tx(x: float) -> float:
        return 250.0 + scale * x

    def ty(y: float) -> float:
        return 250.0 - scale * y

    body = [
        f'<circle class="rim" cx="250" cy="250" r="{_fmt(scale)}" '
        'fill="none" stroke="black" stroke-width="1"/>'
    ]
    if ann.gamma is not None:
        sx, sy = _unit(ann.gamma.start)
        ex, ey = _unit(ann.gamma.end)
        a0 = math.atan2(sy, sx)
        a1 = math.atan2(ey, ex)
        while a1 >= a0:
            a1 -= 2 * math.pi  # clockwise sweep: angles decrease
        samples = 48
        arc_pts = []
        for i in range(samples + 1):
            a = a0 + (a1 - a0) * i / samples
            arc_pts.append(
                f"{_fmt(tx(1.04 * math.cos(a)))},{_fmt(ty(1.04 * math.sin(a)))}"
            )
        body.append(
            f'<polyline class="gamma" points="{" ".join(arc_pts)}" '
            'fill="none" stroke="black" stroke-width="4" stroke-opacity="0.35"/>'
        )
    middle_set = set(ann.middles)
    for i, point in enumerate(inst.points):
        x, y = _unit(point)
        color = COLOR_CSS[inst.coloring.class_of[i]]
        body.append(
            f'<circle class="pt" cx="{_fmt(tx(x))}" cy="{_fmt(ty(y))}" '
            f'r="6" fill="{color}"/>'
        )
        if i in middle_set:
            body.append(
                f'<circle class="middle" cx="{_fmt(tx(x))}" cy="{_fmt(ty(y))}" '
                f'r="10" fill="none" stroke="black" stroke-width="1.5"/>'
            )
    return _svg(500.0, 500.0, "0 0 500 500", body)


def render_svg(result: Union[LineSolution, CircleSolution]) -> str:
    """Render a solved lines2d or circle result as deterministic SVG."""
    if isinstance(result, LineSolution):
        return render_lines_svg(result)
    return render_circle_svg(result)
