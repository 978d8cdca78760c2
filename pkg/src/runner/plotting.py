"""
Snapshot line plots
Self-contained SVG rendering of numerical vs exact profiles
"""

from pathlib import Path
from typing import Sequence, Tuple, Union

import numpy as np
from numpy.typing import ArrayLike

WIDTH = 640
HEIGHT = 400
MARGIN = 50


def get_svg_css() -> str:
    """Get the style block shared by every plot"""
    return """
    <style>
    /* Axes and frame */
    .frame { fill: #ffffff; stroke: #dddddd; stroke-width: 1; }
    .axis { stroke: #333333; stroke-width: 1; }
    .tick { fill: #555555; font-family: sans-serif; font-size: 11px; }

    /* Curves */
    .numeric { fill: none; stroke: #667eea; stroke-width: 2; }
    .exact { fill: none; stroke: #764ba2; stroke-width: 1.5; stroke-dasharray: 6 4; }

    /* Title and legend */
    .title { fill: #1a1a1a; font-family: sans-serif; font-size: 14px; font-weight: bold; }
    .legend { fill: #333333; font-family: sans-serif; font-size: 12px; }
    </style>
    """


def _scale(values: np.ndarray, lo: float, hi: float, start: float, stop: float) -> np.ndarray:
    span = hi - lo if hi > lo else 1.0
    return start + (values - lo) / span * (stop - start)


def _polyline(xs: np.ndarray, ys: np.ndarray, css_class: str) -> str:
    points = " ".join(f"{x:.2f},{y:.2f}" for x, y in zip(xs, ys))
    return f'<polyline class="{css_class}" points="{points}"/>'


def render_snapshot_svg(
    x: ArrayLike,
    u_numeric: ArrayLike,
    u_exact: ArrayLike,
    title: str,
    size: Tuple[int, int] = (WIDTH, HEIGHT),
) -> str:
    """
    Render numeric and exact profiles as one SVG document.

    Args:
        x: Grid nodes
        u_numeric: Numerical solution at the nodes
        u_exact: Exact solution at the nodes
        title: Plot title
        size: Width and height in pixels

    Returns:
        SVG markup
    """
    x = np.asarray(x, dtype=float)
    u_numeric = np.asarray(u_numeric, dtype=float)
    u_exact = np.asarray(u_exact, dtype=float)
    width, height = size

    both = np.concatenate([u_numeric, u_exact])
    y_lo, y_hi = float(np.min(both)), float(np.max(both))
    pad = 0.05 * (y_hi - y_lo) if y_hi > y_lo else 1.0
    y_lo, y_hi = y_lo - pad, y_hi + pad
    x_lo, x_hi = float(x[0]), float(x[-1])

    px = _scale(x, x_lo, x_hi, MARGIN, width - MARGIN)
    # SVG y grows downwards
    py_numeric = _scale(u_numeric, y_lo, y_hi, height - MARGIN, MARGIN)
    py_exact = _scale(u_exact, y_lo, y_hi, height - MARGIN, MARGIN)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        get_svg_css(),
        f'<rect class="frame" x="0" y="0" width="{width}" height="{height}"/>',
        f'<line class="axis" x1="{MARGIN}" y1="{height - MARGIN}" x2="{width - MARGIN}" y2="{height - MARGIN}"/>',
        f'<line class="axis" x1="{MARGIN}" y1="{MARGIN}" x2="{MARGIN}" y2="{height - MARGIN}"/>',
        f'<text class="tick" x="{MARGIN}" y="{height - MARGIN + 16}">{x_lo:g}</text>',
        f'<text class="tick" x="{width - MARGIN}" y="{height - MARGIN + 16}" text-anchor="end">{x_hi:g}</text>',
        f'<text class="tick" x="{MARGIN - 4}" y="{height - MARGIN}" text-anchor="end">{y_lo:.3g}</text>',
        f'<text class="tick" x="{MARGIN - 4}" y="{MARGIN + 4}" text-anchor="end">{y_hi:.3g}</text>',
        f'<text class="title" x="{width / 2:.0f}" y="{MARGIN / 2:.0f}" text-anchor="middle">{title}</text>',
        _polyline(px, py_exact, "exact"),
        _polyline(px, py_numeric, "numeric"),
        f'<text class="legend" x="{width - MARGIN}" y="{MARGIN + 16}" text-anchor="end">numeric (solid), exact (dashed)</text>',
        "</svg>",
    ]
    return "\n".join(parts) + "\n"


def write_snapshot_svg(
    path: Union[str, Path],
    x: Sequence[float],
    u_numeric: Sequence[float],
    u_exact: Sequence[float],
    title: str,
) -> Path:
    """Render a snapshot and write it to path"""
    path = Path(path)
    path.write_text(render_snapshot_svg(x, u_numeric, u_exact, title), encoding="utf-8")
    return path
