"""CSV and SVG renderings of a map's graph over one period.

The CSV carries the exact breakpoints; decimals are annotations only.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import format_rational


def _dec(q: Fraction) -> str:
    return f"{float(q):.10g}"


def emit_csv(f) -> str:
    rows = ["x,y,x_decimal,y_decimal"]
    for x, y in f.points:
        rows.append(f"{format_rational(x)},{format_rational(y)},{_dec(x)},{_dec(y)}")
    return "\n".join(rows) + "\n"


def emit_svg(f, size: int = 400, pad: int = 20) -> str:
    xs = [x for x, _ in f.points]
    ys = [y for _, y in f.points]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys + [x0]), max(ys + [x1])
    span_x = (x1 - x0) or 1
    span_y = (y1 - y0) or 1

    def px(x, y):
        u = pad + float((x - x0) / span_x) * size
        v = pad + size - float((y - y0) / span_y) * size
        return f"{u:.2f},{v:.2f}"

    poly = " ".join(px(x, y) for x, y in f.points)
    diag = f"{px(x0, x0)} {px(x1, x1)}"
    dots = "\n".join(
        f'  <circle cx="{px(x, y).split(",")[0]}" cy="{px(x, y).split(",")[1]}" r="3" fill="crimson"/>'
        for x, y in f.points
    )
    total = size + 2 * pad
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{total}" height="{total}">\n'
        f'  <polyline points="{diag}" fill="none" stroke="#bbb" stroke-dasharray="4"/>\n'
        f'  <polyline points="{poly}" fill="none" stroke="black"/>\n'
        f"{dots}\n"
        "</svg>\n"
    )
