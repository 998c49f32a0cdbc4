"""Membership in Gamma_n, the diagonal F_eta action and the special element xi."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..errors import (
    BreakpointNotInRing,
    CrossingCountMismatch,
    DepthTooSmall,
    NotAProductOfBases,
    NotAStabilizer,
    NotInFEta,
    SlopeNotFactorable,
)
from ..exact import format_rational, in_ring, slope_factor
from ..plmap import CompactPL, IntervalPL, PeriodicPL, support
from ..thompson import chain_generators, member_Fn


def eta(n: int) -> int:
    return n * (n + 1)


@dataclass(frozen=True)
class GammaElement:
    map: PeriodicPL
    base_n: int
    membership_checked: bool = False

    @property
    def eta(self) -> int:
        return eta(self.base_n)

    def __call__(self, x) -> Fraction:
        return self.map.evaluate(x)


def as_periodic(f) -> PeriodicPL:
    if isinstance(f, GammaElement):
        return f.map
    if isinstance(f, PeriodicPL):
        return f
    evaluate = getattr(f, "evaluate", None)
    if evaluate is not None and hasattr(f, "atoms"):
        return evaluate()
    raise TypeError(f"expected a periodic map, got {type(f).__name__}")


def crossing_count(x, y) -> int:
    """Number of integers strictly between x and y."""
    lo, hi = min(x, y), max(x, y)
    if lo == hi:
        return 0
    return math.ceil(hi) - math.floor(lo) - 1


def _pieces(f: PeriodicPL):
    """Open sub-pieces of one period on which the crossing count is constant."""
    for (xa, ya), (xb, yb) in f.segments():
        s = (yb - ya) / (xb - xa)
        cuts = [xa]
        for k in range(math.floor(ya) + 1, math.ceil(yb)):
            cuts.append(xa + (k - ya) / s)
        cuts.append(xb)
        for a, b in zip(cuts, cuts[1:]):
            yield a, b, s


def member_gamma(f, n: int) -> GammaElement:
    """Check the three defining conditions of Gamma_n exactly."""
    f = as_periodic(f)
    e = eta(n)
    for x, y in f.points:
        if not (in_ring(x, e) and in_ring(y, e)):
            raise BreakpointNotInRing(
                f"breakpoint ({format_rational(x)}, {format_rational(y)}) not in Z[1/{e}]"
            )
    for a, b, s in _pieces(f):
        try:
            ex = slope_factor(s, n)
        except NotAProductOfBases as exc:
            raise SlopeNotFactorable(str(exc)) from None
        t = (a + b) / 2
        ft = f.evaluate(t)
        c = crossing_count(t, ft)
        diff = ex.i - ex.j if ft >= t else ex.j - ex.i
        if diff != c:
            raise CrossingCountMismatch(
                f"segment ({format_rational(a)}, {format_rational(b)}) has slope "
                f"{format_rational(s)} (i={ex.i}, j={ex.j}) but crosses {c} integers"
            )
    return GammaElement(f, n, True)


def diagonal_lift(f: CompactPL, n: int) -> GammaElement:
    """Apply ``f`` on every ``[m, m + 1]``."""
    if not member_Fn(f, eta(n)):
        raise NotInFEta(f"map is not in F_{eta(n)}")
    return GammaElement(PeriodicPL(f.points), n, True)


def stab0_project(g, n: int) -> CompactPL:
    """Restriction to [0, 1] of an element fixing 0."""
    p = as_periodic(g)
    if p.evaluate(0) != 0:
        raise NotAStabilizer(f"0 is sent to {format_rational(p.evaluate(0))}")
    f = CompactPL(p.points)
    if not member_Fn(f, eta(n)):
        raise NotInFEta("restriction is not in F_eta")
    return f


def line_graph_to_periodic(graph: IntervalPL) -> PeriodicPL:
    """Periodic map equal to ``graph`` on its domain and the identity elsewhere.

    The domain must be shorter than 1 and the graph must fix its endpoints.
    """
    lo, hi = graph.domain
    if hi - lo >= 1 or graph.image != graph.domain:
        raise ValueError("graph must fix the ends of an interval shorter than 1")

    def func(x):
        for shift in (0, -1, 1):
            t = x + shift
            if lo <= t <= hi:
                return graph.evaluate(t) - shift
        return x

    return PeriodicPL.from_function(func, graph.xs)


def xi_depth_default(n: int) -> int:
    """Least k with ``n*eta/eta^k < 1/3`` whose support also avoids psi_2 .. psi_{eta-1}."""
    e = eta(n)
    psi_lo = Fraction(1, e)  # left end of the second chain support
    psi_hi = Fraction(e - 1, e) + Fraction(1, e * e)  # right end of support eta-1
    k = 1
    while True:
        A, B = Fraction(e, e**k), Fraction(n * e, e**k)
        if B < Fraction(1, 3) and B <= psi_lo and 1 - A >= psi_hi:
            return k
        k += 1


def xi_graph(n: int, k: int) -> IntervalPL:
    """Three-piece graph on ``[-eta/eta^k, n*eta/eta^k]``: slopes eta, n and 1/eta."""
    e = eta(n)
    E = Fraction(e**k)
    A, B = e / E, n * e / E
    if A + B >= 1:
        raise DepthTooSmall(f"depth {k} leaves a support of length {A + B} >= 1")
    return IntervalPL([(-A, -A), ((1 - e) / E, Fraction(0)), (Fraction(0), (n * e - n) / E), (B, B)])


@lru_cache(maxsize=None)
def xi_build(n: int, k: int | None = None) -> GammaElement:
    """The three-segment special element."""
    if k is None:
        k = xi_depth_default(n)
    if k < 1:
        raise DepthTooSmall("depth must be positive")
    return GammaElement(line_graph_to_periodic(xi_graph(n, k)), n, True)


@dataclass(frozen=True)
class GeneratorSet:
    """``xi`` together with the chain generators psi_1 .. psi_eta of F_eta."""

    base_n: int
    xi: GammaElement
    psi: tuple[CompactPL, ...]


@lru_cache(maxsize=None)
def generator_set(n: int) -> GeneratorSet:
    chain = chain_generators(eta(n))
    xi = xi_build(n)
    e = eta(n)
    supp = support(xi.map)
    # xi must meet psi_1 and psi_eta only
    for i, g in enumerate(chain.generators, start=1):
        lo, hi = chain.supports[i - 1]
        meets = any(_overlap_mod1(a, b, lo, hi) for a, b in supp.intervals)
        if meets != (i in (1, e)):
            raise ValueError(f"support of xi meets psi_{i} unexpectedly")
    return GeneratorSet(n, xi, chain.generators)


def _overlap_mod1(a, b, lo, hi) -> bool:
    for k in (-1, 0, 1):
        if max(a + k, lo) < min(b + k, hi):
            return True
    return False
