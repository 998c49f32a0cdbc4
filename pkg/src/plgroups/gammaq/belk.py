"""Conjugation of Gamma_2 to maps of the positive reals commuting with doubling.

The conjugator sends ``[2^k, 2^(k+1)]`` linearly and orientation-reversingly
onto ``[-(k+1), -k]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import UnsupportedBase
from ..exact import in_ring, power_exponent
from ..plmap import IntervalPL
from .membership import as_periodic


def kappa(t) -> Fraction:
    t = Fraction(t)
    if t <= 0:
        raise ValueError("kappa is defined on positive reals")
    k = math.floor(math.log2(t.numerator) - math.log2(t.denominator))
    while Fraction(2) ** k > t:
        k -= 1
    while Fraction(2) ** (k + 1) <= t:
        k += 1
    base = Fraction(2) ** k
    return -k - (t - base) / base


def kappa_inverse(s) -> Fraction:
    s = Fraction(s)
    k = math.floor(-s)
    return Fraction(2) ** k * (1 - k - s)


@dataclass(frozen=True)
class BelkMap:
    map: IntervalPL
    window_exponent: int
    slopes_ok: bool
    ring_ok: bool
    doubling_ok: bool

    @property
    def ok(self) -> bool:
        return self.slopes_ok and self.ring_ok and self.doubling_ok


def default_samples(K: int, count: int = 50) -> list[Fraction]:
    """Deterministic points of Z[1/6] in ``[2^-K, 2^(K-1)]``."""
    lo, hi = Fraction(1, 2**K), Fraction(2 ** (K - 1))
    return [lo + (hi - lo) * Fraction(i, count - 1) for i in range(count)]


def belk_transform(g, n: int = 2, K: int = 3, samples=None) -> BelkMap:
    """``x -> kappa^-1(g(kappa(x)))`` on ``[2^-K, 2^K]`` with its three checks."""
    if n != 2:
        raise UnsupportedBase(f"only n = 2 is supported, got {n}")
    f = as_periodic(g)
    lo_s, hi_s = -K, K
    cands = {Fraction(2) ** k for k in range(-K, K + 1)}
    for b in f.xs:
        for m in range(lo_s - 1, hi_s + 1):
            s = b + m
            if lo_s <= s <= hi_s:
                cands.add(kappa_inverse(s))
    y_lo, y_hi = f.evaluate(lo_s), f.evaluate(hi_s)
    for m in range(math.ceil(y_lo), math.floor(y_hi) + 1):
        s = f.evaluate_inverse(m)
        if lo_s <= s <= hi_s:
            cands.add(kappa_inverse(s))
    xs = sorted(cands)
    T = IntervalPL([(x, kappa_inverse(f.evaluate(kappa(x)))) for x in reversed(xs)][::-1])
    slopes_ok = all(power_exponent(s, 6) is not None for s in T.slopes())
    ring_ok = all(in_ring(x, 6) and in_ring(y, 6) for x, y in T.points)
    if samples is None:
        samples = default_samples(K)
    doubling_ok = all(T.evaluate(2 * x) == 2 * T.evaluate(x) for x in samples)
    return BelkMap(T, K, slopes_ok, ring_ok, doubling_ok)
