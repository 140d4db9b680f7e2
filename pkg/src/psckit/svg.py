"""Standalone SVG chart emission.

Charts are written directly as SVG text with fixed geometry and float
formatting, so report artifacts are hermetic and diffable: identical
inputs produce identical bytes.
"""

from __future__ import annotations

from typing import Sequence

from .mitigation import BoxStats

_W, _H = 480, 320
_MARGIN_L, _MARGIN_R, _MARGIN_T, _MARGIN_B = 56, 16, 34, 46

_BOX_FILL = "#9ecae1"
_AXIS = "#333333"
_LAMBDA_COLOR = "#c44"


def _fmt(v: float) -> str:
    return f"{v:.6g}"


def _scale(v: float, lo: float, hi: float, plot_h: float) -> float:
    if hi <= lo:
        return _MARGIN_T + plot_h / 2
    frac = (v - lo) / (hi - lo)
    return _MARGIN_T + plot_h * (1.0 - frac)


def _header(title: str) -> list[str]:
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" '
        f'viewBox="0 0 {_W} {_H}" font-family="sans-serif" font-size="12">',
        f'<rect width="{_W}" height="{_H}" fill="white"/>',
        f'<text x="{_W / 2:.6g}" y="20" text-anchor="middle" font-size="14">{title}</text>',
    ]


def _y_axis(lo: float, hi: float, plot_h: float) -> list[str]:
    parts = [
        f'<line x1="{_MARGIN_L}" y1="{_MARGIN_T}" x2="{_MARGIN_L}" '
        f'y2="{_fmt(_MARGIN_T + plot_h)}" stroke="{_AXIS}"/>'
    ]
    for k in range(5):
        v = lo + (hi - lo) * k / 4
        y = _scale(v, lo, hi, plot_h)
        parts.append(
            f'<line x1="{_MARGIN_L - 4}" y1="{_fmt(y)}" x2="{_MARGIN_L}" y2="{_fmt(y)}" '
            f'stroke="{_AXIS}"/>'
        )
        parts.append(
            f'<text x="{_MARGIN_L - 8}" y="{_fmt(y + 4)}" text-anchor="end">{_fmt(v)}</text>'
        )
    return parts


def boxplot_svg(
    title: str,
    groups: Sequence[tuple[str, BoxStats]],
    lam: float | None = None,
    lo: float = 0.0,
    hi: float = 1.0,
) -> str:
    """Vertical boxplots with whiskers; optional threshold line."""
    plot_h = _H - _MARGIN_T - _MARGIN_B
    plot_w = _W - _MARGIN_L - _MARGIN_R
    parts = _header(title) + _y_axis(lo, hi, plot_h)
    n = max(len(groups), 1)
    slot = plot_w / n
    box_w = min(slot * 0.5, 60.0)

    if lam is not None:
        y = _scale(lam, lo, hi, plot_h)
        parts.append(
            f'<line x1="{_MARGIN_L}" y1="{_fmt(y)}" x2="{_W - _MARGIN_R}" y2="{_fmt(y)}" '
            f'stroke="{_LAMBDA_COLOR}" stroke-dasharray="5,3"/>'
        )
        parts.append(
            f'<text x="{_W - _MARGIN_R}" y="{_fmt(y - 4)}" text-anchor="end" '
            f'fill="{_LAMBDA_COLOR}">threshold {_fmt(lam)}</text>'
        )

    for k, (label, box) in enumerate(groups):
        cx = _MARGIN_L + slot * (k + 0.5)
        x0 = cx - box_w / 2
        y_q1 = _scale(box.q1, lo, hi, plot_h)
        y_q3 = _scale(box.q3, lo, hi, plot_h)
        y_med = _scale(box.median, lo, hi, plot_h)
        y_lo = _scale(box.whisker_low, lo, hi, plot_h)
        y_hi = _scale(box.whisker_high, lo, hi, plot_h)
        parts.extend(
            [
                f'<line x1="{_fmt(cx)}" y1="{_fmt(y_lo)}" x2="{_fmt(cx)}" y2="{_fmt(y_q1)}" stroke="{_AXIS}"/>',
                f'<line x1="{_fmt(cx)}" y1="{_fmt(y_q3)}" x2="{_fmt(cx)}" y2="{_fmt(y_hi)}" stroke="{_AXIS}"/>',
                f'<line x1="{_fmt(cx - box_w / 4)}" y1="{_fmt(y_lo)}" x2="{_fmt(cx + box_w / 4)}" y2="{_fmt(y_lo)}" stroke="{_AXIS}"/>',
                f'<line x1="{_fmt(cx - box_w / 4)}" y1="{_fmt(y_hi)}" x2="{_fmt(cx + box_w / 4)}" y2="{_fmt(y_hi)}" stroke="{_AXIS}"/>',
                f'<rect x="{_fmt(x0)}" y="{_fmt(y_q3)}" width="{_fmt(box_w)}" height="{_fmt(max(y_q1 - y_q3, 0.5))}" '
                f'fill="{_BOX_FILL}" stroke="{_AXIS}"/>',
                f'<line x1="{_fmt(x0)}" y1="{_fmt(y_med)}" x2="{_fmt(x0 + box_w)}" y2="{_fmt(y_med)}" '
                f'stroke="{_AXIS}" stroke-width="2"/>',
                f'<text x="{_fmt(cx)}" y="{_H - _MARGIN_B + 16}" text-anchor="middle">{label}</text>',
                f'<text x="{_fmt(cx)}" y="{_H - _MARGIN_B + 32}" text-anchor="middle" '
                f'fill="#666">n={box.n}</text>',
            ]
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def bar_chart_svg(
    title: str,
    bars: Sequence[tuple[str, float]],
    lo: float = 0.0,
    hi: float | None = None,
) -> str:
    """Simple vertical bar chart (used for information-gain reports)."""
    plot_h = _H - _MARGIN_T - _MARGIN_B
    plot_w = _W - _MARGIN_L - _MARGIN_R
    top = hi if hi is not None else max((v for _, v in bars), default=1.0) or 1.0
    parts = _header(title) + _y_axis(lo, top, plot_h)
    n = max(len(bars), 1)
    slot = plot_w / n
    bar_w = min(slot * 0.6, 48.0)
    for k, (label, value) in enumerate(bars):
        cx = _MARGIN_L + slot * (k + 0.5)
        y = _scale(value, lo, top, plot_h)
        parts.extend(
            [
                f'<rect x="{_fmt(cx - bar_w / 2)}" y="{_fmt(y)}" width="{_fmt(bar_w)}" '
                f'height="{_fmt(max(_MARGIN_T + plot_h - y, 0.0))}" fill="{_BOX_FILL}" stroke="{_AXIS}"/>',
                f'<text x="{_fmt(cx)}" y="{_H - _MARGIN_B + 16}" text-anchor="middle">{label}</text>',
            ]
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
