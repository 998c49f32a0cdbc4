"""Translation number ``lim 0.f^m / m`` with exact periodic-point certificates."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..plmap import PeriodicPL, power
from .membership import as_periodic


@dataclass(frozen=True)
class RotationEstimate:
    estimate: Fraction
    iterations: int
    error_bound: Fraction
    exact: Fraction | None = None
    period: int | None = None
    shift: int | None = None
    witness: Fraction | None = None

    def __str__(self):
        if self.exact is not None:
            return f"exact {_fmt(self.exact)} (p={self.period},q={self.shift})"
        return f"estimate {_fmt(self.estimate)} +- {_fmt(self.error_bound)} (m={self.iterations})"


def _fmt(q: Fraction) -> str:
    from ..exact import format_rational

    return format_rational(q)


def periodic_point(f: PeriodicPL, p: int) -> tuple[int, Fraction] | None:
    """Some ``(q, x)`` with ``x . f^p = x + q``, solved exactly segment by segment."""
    g = power(f, p)
    best = None
    for (xa, ya), (xb, yb) in g.segments():
        da, db = ya - xa, yb - xb
        lo, hi = min(da, db), max(da, db)
        for q in range(math.ceil(lo), math.floor(hi) + 1):
            if da == db:
                x = xa
            else:
                x = xa + (q - da) * (xb - xa) / (db - da)
            if best is None or (abs(q), x) < (abs(best[0]), best[1]):
                best = (q, x)
    return best


def translation_number(f, m_max: int = 64, p_max: int = 6) -> RotationEstimate:
    """Estimate from the orbit of 0 (error at most 2/m) plus an exact periodic-point search."""
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    g = as_periodic(f)
    x = Fraction(0)
    for _ in range(m_max):
        x = g.evaluate(x)
    est = x / m_max
    bound = Fraction(2, m_max)
    for p in range(1, p_max + 1):
        hit = periodic_point(g, p)
        if hit is not None:
            q, w = hit
            return RotationEstimate(est, m_max, bound, Fraction(q, p), p, q, w)
    return RotationEstimate(est, m_max, bound)
