"""Special elements, mushing and factorization over xi and F_eta."""

from __future__ import annotations

import math
from fractions import Fraction

from ..errors import ConstructionFailed, NotInWindow
from ..plmap import CompactPL, PeriodicPL, _points_in
from ..thompson import extend_partial, into_window, push_map
from .membership import as_periodic, diagonal_lift, eta, stab0_project, xi_build
from .words import FAtom, Word, Xi


def slopes_between(f: PeriodicPL, a, b) -> list[Fraction]:
    """Slopes of the linear pieces of ``f`` over ``[a, b]``."""
    a, b = Fraction(a), Fraction(b)
    pts = [a, *sorted(_points_in(f, a, b)), b]
    return [(f.evaluate(q) - f.evaluate(p)) / (q - p) for p, q in zip(pts, pts[1:])]


def is_special(f, n: int) -> bool:
    """``0.f`` in (0, 1) and slope exactly n on ``(0.f^-1, 0)``."""
    p = as_periodic(f)
    x1 = p.evaluate(0)
    if not 0 < x1 < 1:
        return False
    x0 = p.evaluate_inverse(0)
    return all(s == n for s in slopes_between(p, x0, 0))


def mush(f, n: int) -> CompactPL:
    """``g`` in F_eta with ``g^-1 f`` special.

    On ``[x0 + 1, 1]`` (``x0 = 0.f^-1``) the slope of ``g`` is ``f'/n``, a
    power of eta; the rest of ``[0, 1]`` is filled by cone matching.
    """
    p = as_periodic(f)
    x1 = p.evaluate(0)
    if not 0 < x1 < 1:
        raise NotInWindow(f"0.f = {x1} is not in (0, 1)")
    x0 = p.evaluate_inverse(0)
    ts = [x0, *sorted(_points_in(p, x0, Fraction(0))), Fraction(0)]
    partial = [(t + 1, 1 - (x1 - p.evaluate(t)) / n) for t in ts]
    g = extend_partial(partial, eta(n))
    if not is_special(diagonal_lift(g, n).map.inverse().then(p), n):
        raise ConstructionFailed("mushed element is not special")
    return g


def _lift(f: CompactPL) -> PeriodicPL:
    return PeriodicPL(f.points)


def factor(g, n: int) -> Word:
    """Word over ``XI``, ``XI'`` and F_eta atoms evaluating exactly to ``g``."""
    target = as_periodic(g)
    e = eta(n)
    xi = xi_build(n).map
    xi_inv = xi.inverse()
    x_fwd = xi.evaluate(0)  # 0.xi in (0, 1)
    x_back = xi_inv.evaluate(0)  # 0.xi^-1 in (-1, 0)
    for sign, m in ((1, xi), (-1, xi_inv)):
        if target == m:
            return Word((Xi(sign),), n)

    # (i) right factors bringing 0.g into [0, 1)
    right: list = []
    cur = target
    z = cur.evaluate(0)
    while not 0 <= z < 1:
        m = math.floor(z)
        t = z - m
        if m >= 1:
            if t != 0:
                d = into_window(t, t, 0, x_fwd, e)
                right.append(FAtom(d))
                cur = cur.then(_lift(d))
            right.append(Xi(-1))
            cur = cur.then(xi_inv)
        else:
            if t != 0:
                d = into_window(t, t, 1 + x_back, 1, e)
                right.append(FAtom(d))
                cur = cur.then(_lift(d))
            right.append(Xi(1))
            cur = cur.then(xi)
        z = cur.evaluate(0)

    atoms: list = []
    if z == 0:
        atoms.append(FAtom(stab0_project(cur, n)))
    else:
        # (ii) make it special
        s = mush(cur, n)
        h = _lift(s).inverse().then(cur)
        # (iii) move 0.h onto 0.xi within one orbit class
        a, b = h.evaluate(0), x_fwd
        t_map = push_map(0, 1, a, b, e)
        # (iv) what is left fixes 0
        rest = h.then(_lift(t_map)).then(xi_inv)
        e_map = stab0_project(rest, n)
        atoms += [FAtom(s), FAtom(e_map), Xi(1), FAtom(t_map.inverse())]
    atoms += [a.inverse() for a in reversed(right)]
    word = Word(tuple(atoms), n).simplified()
    if word.evaluate() != target:
        raise ConstructionFailed("factorization does not recompose")
    return word
