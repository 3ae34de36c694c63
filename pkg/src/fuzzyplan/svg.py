"""Deterministic SVG 1.1 rendering of workspaces and candidate paths.

Byte-identical output for identical inputs is part of the contract (golden
file tests diff the raw text), so coordinates use a fixed format, element
order is fixed, and nothing derives from the clock or the environment.

Obstacles are filled with a gray level proportional to one minus their
degree: a degree-1 obstacle renders lightest (visually not an obstacle at
all), a degree-0 one solid black. The chosen path is solid, the other
candidates dashed. Start and goal are labeled A and B.
"""

from __future__ import annotations

from .evaluation import Path
from .world import Rect, Scenario

_SCALE = 40  # px per workspace unit
_PAD = 1.0  # workspace units of margin around the bounds

_FRAME_STYLE = 'fill="none" stroke="#222222" stroke-width="0.06"'
_OBSTACLE_STROKE = 'stroke="#444444" stroke-width="0.04"'
_OTHER_PATH_STYLE = (
    'fill="none" stroke="#33658a" stroke-width="0.1" stroke-dasharray="0.35 0.25"'
)
_CHOSEN_PATH_STYLE = 'fill="none" stroke="#c1292e" stroke-width="0.14"'
_MARKER_STYLE = 'fill="#1d1d1d"'


def _fmt(v: float) -> str:
    return f"{v:.6g}"


def render_svg(
    scenario: Scenario,
    candidates: list[Path] | None = None,
    chosen: int | None = None,
) -> str:
    b = scenario.bounds
    width = b.xmax - b.xmin + 2 * _PAD
    height = b.ymax - b.ymin + 2 * _PAD

    def txf(x: float) -> float:
        return x - b.xmin + _PAD

    def tyf(y: float) -> float:
        return b.ymax - y + _PAD  # workspace y up, svg y down

    def tx(x: float) -> str:
        return _fmt(txf(x))

    def ty(y: float) -> str:
        return _fmt(tyf(y))

    out: list[str] = []
    out.append('<?xml version="1.0" encoding="UTF-8"?>')
    out.append(
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width * _SCALE)}" height="{_fmt(height * _SCALE)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">'
    )
    out.append(
        f'<rect x="0" y="0" width="{_fmt(width)}" height="{_fmt(height)}" '
        'fill="#ffffff"/>'
    )
    out.append(
        f'<rect x="{tx(b.xmin)}" y="{ty(b.ymax)}" '
        f'width="{_fmt(b.xmax - b.xmin)}" height="{_fmt(b.ymax - b.ymin)}" '
        f"{_FRAME_STYLE}/>"
    )

    for o in scenario.obstacles:
        g = round(255 * min(max(o.degree, 0.0), 1.0))
        fill = f'fill="rgb({g},{g},{g})"'
        s = o.shape
        if isinstance(s, Rect):
            out.append(
                f'<rect x="{tx(s.xmin)}" y="{ty(s.ymax)}" '
                f'width="{_fmt(s.xmax - s.xmin)}" height="{_fmt(s.ymax - s.ymin)}" '
                f"{fill} {_OBSTACLE_STROKE}/>"
            )
        else:
            out.append(
                f'<circle cx="{tx(s.cx)}" cy="{ty(s.cy)}" r="{_fmt(s.radius)}" '
                f"{fill} {_OBSTACLE_STROKE}/>"
            )

    if candidates:
        ordered = [i for i in range(len(candidates)) if i != chosen]
        if chosen is not None:
            ordered.append(chosen)  # chosen drawn last, on top
        for i in ordered:
            pts = " ".join(
                f"{tx(w.x)},{ty(w.y)}" for w in candidates[i].waypoints
            )
            style = _CHOSEN_PATH_STYLE if i == chosen else _OTHER_PATH_STYLE
            out.append(f'<polyline points="{pts}" {style}/>')

    for label, q in (("A", scenario.start), ("B", scenario.goal)):
        out.append(
            f'<circle cx="{tx(q.x)}" cy="{ty(q.y)}" r="0.18" {_MARKER_STYLE}/>'
        )
        out.append(
            f'<text x="{_fmt(txf(q.x) + 0.3)}" y="{_fmt(tyf(q.y) - 0.3)}" '
            f'font-family="sans-serif" font-size="0.7" {_MARKER_STYLE}>{label}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
