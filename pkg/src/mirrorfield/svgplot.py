"""Tiny self-contained SVG writers for sweep output (no external renderer)."""

from __future__ import annotations

import math

_WIDTH = 860
_HEIGHT = 520
_MARGIN_L = 70
_MARGIN_R = 170
_MARGIN_T = 40
_MARGIN_B = 55

_PALETTE = (
    "#2b6cb0", "#c05621", "#2f855a", "#9b2c2c",
    "#6b46c1", "#986801", "#0e7490", "#97266d",
)


def _finite_range(values) -> tuple[float, float]:
    finite = [v for v in values if math.isfinite(v)]
    if not finite:
        return 0.0, 1.0
    lo, hi = min(finite), max(finite)
    if lo == hi:
        lo, hi = lo - 0.5, hi + 0.5
    return lo, hi


def _ticks(lo: float, hi: float, count: int = 5):
    return [lo + (hi - lo) * i / (count - 1) for i in range(count)]


def _fmt(value: float) -> str:
    return f"{value:.4g}"


def line_plot(x, series, title: str = "", x_label: str = "", y_label: str = "") -> str:
    """Render ``series`` (label -> y values) against ``x`` as polylines."""
    x = list(map(float, x))
    x_lo, x_hi = _finite_range(x)
    y_all = [v for _, ys in series for v in ys]
    y_lo, y_hi = _finite_range(y_all)

    plot_w = _WIDTH - _MARGIN_L - _MARGIN_R
    plot_h = _HEIGHT - _MARGIN_T - _MARGIN_B

    def sx(v: float) -> float:
        return _MARGIN_L + (v - x_lo) / (x_hi - x_lo) * plot_w

    def sy(v: float) -> float:
        return _MARGIN_T + plot_h - (v - y_lo) / (y_hi - y_lo) * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}" '
        f'viewBox="0 0 {_WIDTH} {_HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
        f'<text x="{_WIDTH / 2:.1f}" y="22" text-anchor="middle" font-size="15">{title}</text>',
    ]
    axis = f'stroke="#444" stroke-width="1"'
    parts.append(
        f'<line x1="{_MARGIN_L}" y1="{_MARGIN_T + plot_h}" '
        f'x2="{_MARGIN_L + plot_w}" y2="{_MARGIN_T + plot_h}" {axis}/>'
    )
    parts.append(
        f'<line x1="{_MARGIN_L}" y1="{_MARGIN_T}" '
        f'x2="{_MARGIN_L}" y2="{_MARGIN_T + plot_h}" {axis}/>'
    )
    for tick in _ticks(x_lo, x_hi):
        px = sx(tick)
        parts.append(
            f'<line x1="{px:.1f}" y1="{_MARGIN_T + plot_h}" '
            f'x2="{px:.1f}" y2="{_MARGIN_T + plot_h + 5}" {axis}/>'
        )
        parts.append(
            f'<text x="{px:.1f}" y="{_MARGIN_T + plot_h + 20}" '
            f'text-anchor="middle">{_fmt(tick)}</text>'
        )
    for tick in _ticks(y_lo, y_hi):
        py = sy(tick)
        parts.append(
            f'<line x1="{_MARGIN_L - 5}" y1="{py:.1f}" x2="{_MARGIN_L}" y2="{py:.1f}" {axis}/>'
        )
        parts.append(
            f'<text x="{_MARGIN_L - 9}" y="{py + 4:.1f}" text-anchor="end">{_fmt(tick)}</text>'
        )
    parts.append(
        f'<text x="{_MARGIN_L + plot_w / 2:.1f}" y="{_HEIGHT - 12}" '
        f'text-anchor="middle">{x_label}</text>'
    )
    parts.append(
        f'<text x="18" y="{_MARGIN_T + plot_h / 2:.1f}" text-anchor="middle" '
        f'transform="rotate(-90 18 {_MARGIN_T + plot_h / 2:.1f})">{y_label}</text>'
    )
    for index, (label, ys) in enumerate(series):
        colour = _PALETTE[index % len(_PALETTE)]
        points = " ".join(
            f"{sx(px):.2f},{sy(py):.2f}"
            for px, py in zip(x, ys)
            if math.isfinite(py)
        )
        parts.append(
            f'<polyline fill="none" stroke="{colour}" stroke-width="1.6" points="{points}"/>'
        )
        ly = _MARGIN_T + 16 * index + 8
        lx = _MARGIN_L + plot_w + 12
        parts.append(
            f'<line x1="{lx}" y1="{ly}" x2="{lx + 18}" y2="{ly}" '
            f'stroke="{colour}" stroke-width="2"/>'
        )
        parts.append(f'<text x="{lx + 24}" y="{ly + 4}">{label}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _heat_colour(fraction: float) -> str:
    """Two-stop blue-to-red map through white."""
    fraction = min(1.0, max(0.0, fraction))
    if fraction < 0.5:
        mix = fraction / 0.5
        r = int(43 + (255 - 43) * mix)
        g = int(75 + (255 - 75) * mix)
        b = int(155 + (255 - 155) * mix)
    else:
        mix = (fraction - 0.5) / 0.5
        r = int(255 + (196 - 255) * mix)
        g = int(255 + (57 - 255) * mix)
        b = int(255 + (43 - 255) * mix)
    return f"#{r:02x}{g:02x}{b:02x}"


def heat_panels(x_values, y_values, panels, title: str = "",
                x_label: str = "", y_label: str = "") -> str:
    """Render one heat panel per (label, matrix) pair, side by side.

    ``matrix[i][j]`` is the value at ``(x_values[i], y_values[j])``.
    """
    n_panels = len(panels)
    panel_w = 300
    panel_h = 300
    gap = 60
    width = _MARGIN_L + n_panels * panel_w + (n_panels - 1) * gap + 30
    height = panel_h + 130

    all_values = [v for _, matrix in panels for row in matrix for v in row]
    lo, hi = _finite_range(all_values)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width / 2:.1f}" y="22" text-anchor="middle" font-size="15">{title}</text>',
    ]
    nx, ny = len(x_values), len(y_values)
    cell_w = panel_w / nx
    cell_h = panel_h / ny
    for index, (label, matrix) in enumerate(panels):
        left = _MARGIN_L + index * (panel_w + gap)
        top = 45
        for i in range(nx):
            for j in range(ny):
                value = matrix[i][j]
                frac = 0.0 if hi == lo else (value - lo) / (hi - lo)
                px = left + i * cell_w
                py = top + panel_h - (j + 1) * cell_h
                parts.append(
                    f'<rect x="{px:.2f}" y="{py:.2f}" width="{cell_w + 0.5:.2f}" '
                    f'height="{cell_h + 0.5:.2f}" fill="{_heat_colour(frac)}"/>'
                )
        parts.append(
            f'<rect x="{left}" y="{top}" width="{panel_w}" height="{panel_h}" '
            f'fill="none" stroke="#444"/>'
        )
        parts.append(
            f'<text x="{left + panel_w / 2:.1f}" y="{top + panel_h + 20}" '
            f'text-anchor="middle">{label}</text>'
        )
        parts.append(
            f'<text x="{left + panel_w / 2:.1f}" y="{top + panel_h + 40}" '
            f'text-anchor="middle">{x_label}: {_fmt(min(x_values))} to {_fmt(max(x_values))}, '
            f'{y_label}: {_fmt(min(y_values))} to {_fmt(max(y_values))}</text>'
        )
    parts.append(
        f'<text x="{_MARGIN_L}" y="{height - 14}">scale: {_fmt(lo)} (blue) to {_fmt(hi)} (red)</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
