"""SVG pictures of 2-D barcodes: one ``<rect>`` or ``<polygon>`` per interval.

Infinite ends are clipped to a frame slightly larger than the finite data.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Tuple
from xml.sax.saxutils import escape

from .decorated import is_finite
from .intervals import Barcode, Rectangle, Triangle

__all__ = ["render_svg"]

PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"]


def _finite_coords(B: Barcode) -> List[Fraction]:
    out = []
    for _, I in B:
        if isinstance(I, Rectangle):
            vals = [c.value for c in I.min] + [c.value for c in I.max]
        elif isinstance(I, Triangle):
            vals = [I.a, I.b, -I.a if is_finite(I.a) else 0, -I.b if is_finite(I.b) else 0]
        else:
            vals = list(I.min)
        out += [v for v in vals if is_finite(v)]
    return out


def _frame(B: Barcode) -> Tuple[Fraction, Fraction]:
    vals = _finite_coords(B) or [Fraction(0)]
    lo, hi = min(vals), max(vals)
    pad = max((hi - lo) / 4, Fraction(1))
    return lo - pad, hi + pad


def _clip(v, lo, hi) -> Fraction:
    if not is_finite(v):
        return hi if v > 0 else lo
    return min(max(v, lo), hi)


def render_svg(B: Barcode, size: int = 400) -> str:
    """Draw a 2-D barcode of rectangles, free intervals or triangles."""
    if B.dim != 2:
        raise ValueError("only 2-D barcodes can be drawn")
    lo, hi = _frame(B)
    scale = Fraction(size) / (hi - lo)

    def px(x, y) -> Tuple[float, float]:
        return float((x - lo) * scale), float((hi - y) * scale)

    shapes = []
    for k, (ident, I) in enumerate(B):
        color = PALETTE[k % len(PALETTE)]
        style = f'fill="{color}" fill-opacity="0.25" stroke="{color}" stroke-width="1.5"'
        title = f"<title>{escape(ident)}: {escape(str(I))}</title>"
        if isinstance(I, Triangle):
            a, b = _clip(I.a, lo, hi), _clip(I.b, lo, hi)
            corners = [(a, -a), (a, b), (-b, b)]
            pts = " ".join("%.3f,%.3f" % px(x, y) for x, y in corners)
            shapes.append(f'<polygon points="{pts}" {style}>{title}</polygon>')
            continue
        R = I if isinstance(I, Rectangle) else I.as_rectangle()
        x0, y0 = (_clip(c.value, lo, hi) for c in R.min)
        x1, y1 = (_clip(c.value, lo, hi) for c in R.max)
        left, top = px(x0, y1)
        right, bottom = px(x1, y0)
        shapes.append(
            f'<rect x="{left:.3f}" y="{top:.3f}" width="{right - left:.3f}" height="{bottom - top:.3f}" '
            f"{style}>{title}</rect>"
        )

    ox, oy = px(0, 0)
    axes = (
        f'<line x1="0" y1="{oy:.3f}" x2="{size}" y2="{oy:.3f}" stroke="#999" stroke-width="0.5"/>'
        f'<line x1="{ox:.3f}" y1="0" x2="{ox:.3f}" y2="{size}" stroke="#999" stroke-width="0.5"/>'
    )
    body = "\n  ".join([axes] + shapes)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">\n  {body}\n</svg>\n'
    )
