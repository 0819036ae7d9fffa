"""Standalone SVG line chart of a solution table."""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .errors import DegenerateRange
from .reporting import SolutionTable, format_number


@dataclass(frozen=True)
class PlotConfig:
    width: int = 800
    height: int = 600
    margin: int = 50
    approx_color: str = "red"
    exact_color: str = "yellow"
    error_color: str = "green"
    title: str = ""

    def __post_init__(self):
        if not (self.width > 2 * self.margin and self.height > 2 * self.margin):
            raise ValueError("width and height must exceed twice the margin")


def _coord(v: float) -> str:
    return f"{v:.4f}"


def render_svg(table: SolutionTable, config: PlotConfig = PlotConfig()) -> str:
    xs = [row.x for row in table.rows]
    series = [
        ("Y_Approximate", config.approx_color, [r.y_approx for r in table.rows]),
        ("Y_Exact", config.exact_color, [r.y_exact for r in table.rows]),
        ("Absolute_Error", config.error_color, [r.abs_error for r in table.rows]),
    ]
    all_ys = [y for _, _, ys in series for y in ys]
    x_min, x_max = min(xs), max(xs)
    y_min, y_max = min(all_ys), max(all_ys)
    if x_max == x_min:
        raise DegenerateRange("all x values coincide")
    if y_max == y_min:
        raise DegenerateRange("all y values coincide")

    m = config.margin
    left, right = m, config.width - m
    top, bottom = m, config.height - m

    def px(x):
        return left + (x - x_min) / (x_max - x_min) * (right - left)

    def py(y):
        return bottom - (y - y_min) / (y_max - y_min) * (bottom - top)

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="yes"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{config.width}" height="{config.height}" '
        f'viewBox="0 0 {config.width} {config.height}">',
        f'<rect x="0" y="0" width="{config.width}" height="{config.height}" fill="white"/>',
    ]
    if config.title:
        out.append(
            f'<text x="{config.width / 2:g}" y="{m / 2:g}" text-anchor="middle" '
            f'font-size="14">{escape(config.title)}</text>'
        )

    # axes along the bottom and left edges of the plot area
    out.append(
        f'<line x1="{left}" y1="{bottom}" x2="{right}" y2="{bottom}" stroke="black"/>'
    )
    out.append(f'<line x1="{left}" y1="{top}" x2="{left}" y2="{bottom}" stroke="black"/>')
    small = 'font-size="10" font-family="monospace"'
    out.append(
        f'<text x="{left}" y="{bottom + 15}" text-anchor="start" {small}>{x_min:.6g}</text>'
    )
    out.append(
        f'<text x="{right}" y="{bottom + 15}" text-anchor="end" {small}>{x_max:.6g}</text>'
    )
    out.append(
        f'<text x="{left - 4}" y="{bottom}" text-anchor="end" {small}>{y_min:.6g}</text>'
    )
    out.append(f'<text x="{left - 4}" y="{top + 8}" text-anchor="end" {small}>{y_max:.6g}</text>')
    out.append(f'<text x="{right}" y="{bottom + 30}" text-anchor="end" {small}>X</text>')

    for name, color, ys in series:
        points = " ".join(f"{_coord(px(x))},{_coord(py(y))}" for x, y in zip(xs, ys))
        out.append(
            f'<polyline data-series="{name}" fill="none" stroke="{escape(color)}" '
            f'stroke-width="2" points="{points}"/>'
        )

    out.append('<g class="legend" font-size="12">')
    for i, (name, color, _) in enumerate(series):
        ly = top + 10 + 16 * i
        out.append(
            f'<rect x="{right - 130}" y="{ly - 8}" width="10" height="10" '
            f'fill="{escape(color)}" stroke="black"/>'
        )
        out.append(f'<text x="{right - 115}" y="{ly + 1}">{name}</text>')
    out.append("</g>")
    out.append(f"<desc>h={format_number(table.h)} rows={len(table.rows)}</desc>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
