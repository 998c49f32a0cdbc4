"""Exact rational helpers.

Coordinates are plain :class:`fractions.Fraction` values, which are already
immutable, canonical (lowest terms, positive denominator) and backed by
arbitrary precision integers.  This module adds the ring-membership and
slope-factoring tests the rest of the package needs, plus the text encoding.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import NotAProductOfBases, NotInRing, ParseError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def Q(x, y=None) -> Fraction:
    """Shorthand constructor: ``Q(3, 4)``, ``Q("3/4")``, ``Q(2)``."""
    if y is not None:
        return Fraction(x, y)
    if isinstance(x, str):
        return parse_rational(x)
    return Fraction(x)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; any representative is accepted and canonicalized."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ParseError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    """Canonical encoding: ``"p/q"`` in lowest terms, ``"p"`` when q = 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class SlopeExponents:
    """The rational ``base_n**i * (base_n + 1)**j``."""

    i: int
    j: int
    base_n: int

    @property
    def value(self) -> Fraction:
        n = self.base_n
        return Fraction(n) ** self.i * Fraction(n + 1) ** self.j


def _strip(k: int, p: int) -> tuple[int, int]:
    e = 0
    while k % p == 0:
        k //= p
        e += 1
    return k, e


def slope_factor(q, n: int) -> SlopeExponents:
    """Unique ``(i, j)`` with ``q = n**i * (n+1)**j``.

    Trial division of numerator and denominator by ``n`` and ``n + 1`` only,
    followed by exact recomposition.
    """
    q = Fraction(q)
    if n < 2:
        raise ValueError("n must be >= 2")
    if q <= 0:
        raise NotAProductOfBases(f"{q} is not positive")
    num, i_pos = _strip(q.numerator, n)
    num, j_pos = _strip(num, n + 1)
    den, i_neg = _strip(q.denominator, n)
    den, j_neg = _strip(den, n + 1)
    if num != 1 or den != 1:
        raise NotAProductOfBases(f"{q} is not a product of powers of {n} and {n + 1}")
    out = SlopeExponents(i_pos - i_neg, j_pos - j_neg, n)
    if out.value != q:
        raise NotAProductOfBases(f"inconsistent exponents for {q}")
    return out


def power_exponent(q, n: int) -> int | None:
    """``m`` with ``q == n**m``, or None."""
    q = Fraction(q)
    if q <= 0:
        return None
    num, e_pos = _strip(q.numerator, n)
    den, e_neg = _strip(q.denominator, n)
    if num != 1 or den != 1:
        return None
    return e_pos - e_neg


def in_ring(x, m: int) -> bool:
    """True iff every prime factor of the denominator of ``x`` divides ``m``."""
    d = Fraction(x).denominator
    while d != 1:
        g = gcd(d, m)
        if g == 1:
            return False
        d //= g
    return True


def nary_depth(x, n: int) -> int:
    """Least ``k >= 0`` with ``x * n**k`` an integer."""
    x = Fraction(x)
    if not in_ring(x, n):
        raise NotInRing(f"{x} is not in Z[1/{n}]")
    k, d, p = 0, x.denominator, 1
    while p % d != 0:
        p *= n
        k += 1
    return k


def residue(x, n: int) -> int:
    """``m mod (n-1)`` for any representation ``x = m / n**k``.

    Well defined because ``n ≡ 1 mod (n-1)``.
    """
    k = nary_depth(x, n)
    m = Fraction(x) * n**k
    return int(m) % (n - 1)
