"""Two-series scatter plot as bare SVG markup: dots for the first series, crosses for the second."""
from __future__ import annotations

from typing import Sequence, Tuple

WIDTH = 640
HEIGHT = 400
MARGIN = 40


def _scale(values: Sequence[float], lo_px: float, hi_px: float) -> Tuple[float, float, float]:
    lo, hi = min(values), max(values)
    span = hi - lo or 1.0
    return lo, span, (hi_px - lo_px) / span


def scatter_svg(
    x: Sequence[float],
    dots: Sequence[float],
    crosses: Sequence[float],
    title: str = "",
    labels: Tuple[str, str] = ("log λ", "m(q)"),
) -> str:
    if not (len(x) == len(dots) == len(crosses)) or not len(x):
        raise ValueError("x, dots and crosses need the same non-zero length")
    x_lo, _, x_k = _scale(x, MARGIN, WIDTH - MARGIN)
    y_lo, _, y_k = _scale(list(dots) + list(crosses), MARGIN, HEIGHT - MARGIN)

    def px(v: float) -> float:
        return MARGIN + (v - x_lo) * x_k

    def py(v: float) -> float:
        return HEIGHT - MARGIN - (v - y_lo) * y_k

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<title>{title}</title>',
        f'<line x1="{MARGIN}" y1="{HEIGHT - MARGIN}" x2="{WIDTH - MARGIN}" y2="{HEIGHT - MARGIN}" stroke="black"/>',
        f'<line x1="{MARGIN}" y1="{MARGIN}" x2="{MARGIN}" y2="{HEIGHT - MARGIN}" stroke="black"/>',
        f'<g class="dots" fill="black"><desc>{labels[0]}</desc>',
    ]
    for xv, yv in zip(x, dots):
        parts.append(f'<circle cx="{px(xv):.2f}" cy="{py(yv):.2f}" r="3"/>')
    parts.append("</g>")
    parts.append(f'<g class="crosses" stroke="black"><desc>{labels[1]}</desc>')
    for xv, yv in zip(x, crosses):
        cx, cy = px(xv), py(yv)
        parts.append(
            f'<path d="M{cx - 4:.2f},{cy - 4:.2f} L{cx + 4:.2f},{cy + 4:.2f} '
            f'M{cx - 4:.2f},{cy + 4:.2f} L{cx + 4:.2f},{cy - 4:.2f}"/>'
        )
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
