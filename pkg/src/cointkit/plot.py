"""Deterministic SVG trend plots.

The emitter writes plain SVG 1.1 by hand: one polyline per variable over
the year axis, axis labels, a legend, and a second y-scale when the plotted
magnitudes differ by more than two orders (otherwise the smaller curve
flattens into the axis).  Identical inputs produce byte-identical files.
"""

from __future__ import annotations

import math

from .errors import UnknownVariable
from .series import Dataset

WIDTH, HEIGHT = 760, 420
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 64, 64, 40, 56
PALETTE = ("#1f6fb4", "#d95f02", "#2a9d4e", "#9467bd", "#8c564b", "#555555")
DUAL_SCALE_RATIO = 100.0


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _nice_ticks(lo: float, hi: float, n: int = 5) -> list[float]:
    if hi <= lo:
        hi = lo + 1.0
    span = hi - lo
    raw = span / n
    mag = 10.0 ** math.floor(math.log10(raw))
    step = 10.0 * mag
    for mult in (1.0, 2.0, 2.5, 5.0, 10.0):
        if raw <= mult * mag:
            step = mult * mag
            break
    start = step * math.ceil(lo / step)
    ticks = []
    v = start
    while v <= hi + 1e-9 * span:
        ticks.append(round(v, 10))
        v += step
    return ticks


def render_plot(d: Dataset, variables: list[str], path: str) -> None:
    """Write an SVG line chart of the named variables to ``path``."""
    if not variables:
        raise UnknownVariable("no variables selected for plotting")
    series = [d[name] for name in variables]

    years = d.years
    x0, x1 = years[0], years[-1]
    plot_w = WIDTH - MARGIN_L - MARGIN_R
    plot_h = HEIGHT - MARGIN_T - MARGIN_B

    def x_px(year: float) -> float:
        if x1 == x0:
            return MARGIN_L + plot_w / 2.0
        return MARGIN_L + (year - x0) / (x1 - x0) * plot_w

    # split onto two y-scales when magnitudes differ by > DUAL_SCALE_RATIO
    max_abs = [max(abs(v) for v in s.values) or 1.0 for s in series]
    dual = len(series) > 1 and max(max_abs) / min(max_abs) > DUAL_SCALE_RATIO
    if dual:
        threshold = (max(max_abs) * min(max_abs)) ** 0.5
        axis_of = [0 if m >= threshold else 1 for m in max_abs]
    else:
        axis_of = [0] * len(series)

    scales = []
    for axis in (0, 1) if dual else (0,):
        vals = [v for s, a in zip(series, axis_of) if a == axis for v in s.values]
        lo, hi = min(vals), max(vals)
        if lo == hi:
            lo, hi = lo - 1.0, hi + 1.0
        pad = 0.05 * (hi - lo)
        scales.append((lo - pad, hi + pad))

    def y_px(value: float, axis: int) -> float:
        lo, hi = scales[axis]
        return MARGIN_T + (hi - value) / (hi - lo) * plot_h

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<rect x="{MARGIN_L}" y="{MARGIN_T}" width="{plot_w}" height="{plot_h}" '
        'fill="none" stroke="#333333" stroke-width="1"/>',
    ]

    # x ticks: thin to at most 13 labels
    step = max(1, (len(years) + 12) // 13)
    for year in years[::step]:
        px = x_px(year)
        parts.append(
            f'<line x1="{_fmt(px)}" y1="{HEIGHT - MARGIN_B}" x2="{_fmt(px)}" '
            f'y2="{HEIGHT - MARGIN_B + 5}" stroke="#333333" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_fmt(px)}" y="{HEIGHT - MARGIN_B + 20}" font-size="11" '
            f'text-anchor="middle" font-family="sans-serif">{year}</text>'
        )
    parts.append(
        f'<text x="{_fmt(MARGIN_L + plot_w / 2.0)}" y="{HEIGHT - 12}" font-size="13" '
        'text-anchor="middle" font-family="sans-serif">year</text>'
    )

    for axis, (lo, hi) in enumerate(scales):
        anchor = "end" if axis == 0 else "start"
        tick_x = MARGIN_L if axis == 0 else WIDTH - MARGIN_R
        label_dx = -8 if axis == 0 else 8
        for tick in _nice_ticks(lo, hi):
            py = y_px(tick, axis)
            parts.append(
                f'<line x1="{_fmt(tick_x - (4 if axis == 0 else 0))}" y1="{_fmt(py)}" '
                f'x2="{_fmt(tick_x + (0 if axis == 0 else 4))}" y2="{_fmt(py)}" '
                'stroke="#333333" stroke-width="1"/>'
            )
            parts.append(
                f'<text x="{_fmt(tick_x + label_dx)}" y="{_fmt(py + 4)}" font-size="11" '
                f'text-anchor="{anchor}" font-family="sans-serif">{tick:g}</text>'
            )
    axis_title = "value" if not dual else "value (left / right scales)"
    parts.append(
        f'<text x="16" y="{_fmt(MARGIN_T + plot_h / 2.0)}" font-size="13" '
        f'text-anchor="middle" font-family="sans-serif" '
        f'transform="rotate(-90 16 {_fmt(MARGIN_T + plot_h / 2.0)})">{axis_title}</text>'
    )

    for idx, (s, axis) in enumerate(zip(series, axis_of)):
        color = PALETTE[idx % len(PALETTE)]
        points = " ".join(
            f"{_fmt(x_px(year))},{_fmt(y_px(value, axis))}"
            for year, value in zip(s.years, s.values)
        )
        parts.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="1.8" points="{points}"/>'
        )
        ly = MARGIN_T + 16 + 18 * idx
        lx = MARGIN_L + 12
        parts.append(
            f'<line x1="{lx}" y1="{ly - 4}" x2="{lx + 22}" y2="{ly - 4}" '
            f'stroke="{color}" stroke-width="1.8"/>'
        )
        suffix = " (right)" if dual and axis == 1 else ""
        parts.append(
            f'<text x="{lx + 28}" y="{ly}" font-size="12" '
            f'font-family="sans-serif">{s.name}{suffix}</text>'
        )

    parts.append("</svg>")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(parts) + "\n")
