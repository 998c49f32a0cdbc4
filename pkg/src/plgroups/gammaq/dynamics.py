"""Contraction dynamics and commutator certificates in Q_n."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import ConstructionFailed, NotStablySupported, TooWide, TrivialInput
from ..exact import residue
from ..plmap import CompactPL, PeriodicPL, agree_on, support
from ..thompson import cone_embed, interval_map_points, into_window, point_between
from .membership import as_periodic, eta, generator_set, xi_build
from .special import factor, is_special
from .words import Comm, FAtom, Word, Xi, comm_word, f_word, xi_word


def _lands_in(a: Fraction, b: Fraction, v0: Fraction, v1: Fraction) -> bool:
    """``[a, b]`` lies inside ``(v0, v1) + k`` for a single integer k."""
    k = math.floor(a - v0)
    return any(v0 + j < a and b < v1 + j for j in (k - 1, k))


def _squeeze_map(a: Fraction, b: Fraction, n: int) -> CompactPL:
    """F_eta map taking ``[a, b]`` (``a <= 0 <= b``) into ``(0.xi^-1, B)``.

    ``B`` is the right end of the support of xi, so that a following ``xi``
    lands the whole interval strictly inside ``(0, 1)``.
    """
    e = eta(n)
    xi = xi_build(n).map
    x_back = xi.evaluate_inverse(0)
    hi = support(xi).intervals[0][1]
    b2 = point_between(b, a + 1, e)
    a2 = point_between(b2, a + 1, e, prefer="high")
    b3 = point_between(0, hi, e, res=residue(b2, e))
    a3 = point_between(max(x_back + 1, b3), 1, e, res=residue(a2, e), prefer="high")
    pts = interval_map_points(0, b2, 0, b3, e)
    pts += interval_map_points(b2, a2, b3, a3, e)[1:]
    pts += interval_map_points(a2, 1, a3, 1, e)[1:]
    return CompactPL(pts)


def _window(v0: Fraction, v1: Fraction) -> tuple[Fraction, Fraction]:
    c = v0 - math.floor(v0)
    return c, min(c + (v1 - v0), Fraction(1))


def contract(U, V, n: int) -> Word:
    """Word whose evaluation maps ``U + Z`` into ``V + Z``."""
    u0, u1 = (Fraction(x) for x in U)
    v0, v1 = (Fraction(x) for x in V)
    if u1 - u0 >= 1:
        raise TooWide(f"|U| = {u1 - u0} >= 1")
    if not v0 < v1:
        raise ValueError("V is empty")
    if _lands_in(u0, u1, v0, v1):
        return Word((), n)
    e = eta(n)
    c, d = _window(v0, v1)
    shift = math.floor(u0)
    a, b = u0 - shift, u1 - shift
    atoms: list = []
    if 0 < a and b < 1:
        atoms.append(FAtom(into_window(a, b, c, d, e)))
    else:
        if a > 0:  # the integer 1 lies in [a, b]
            a, b = a - 1, b - 1
        D = _squeeze_map(a, b, n)
        xi = xi_build(n).map
        pa = xi.evaluate(D.evaluate(a + 1) - 1)
        pb = xi.evaluate(D.evaluate(b))
        atoms += [FAtom(D), Xi(1), FAtom(into_window(pa, pb, c, d, e))]
    w = Word(tuple(atoms), n)
    f = w.evaluate()
    if not _lands_in(f.evaluate(u0), f.evaluate(u1), v0, v1):
        raise ConstructionFailed("contraction did not land inside V")
    return w


def minimal_move(x, W, n: int) -> Word:
    """Word moving the point ``x`` into ``W + Z``."""
    return contract((x, x), W, n)


def fixed_gap(f) -> tuple[Fraction, Fraction]:
    """Largest open interval (mod Z) fixed pointwise by ``f``."""
    p = as_periodic(f)
    supp = support(p)
    if supp.is_empty():
        return Fraction(0), Fraction(1)
    h = supp.hull()
    if h is None or h[1] - h[0] >= 1:
        raise NotStablySupported("the map fixes no open interval")
    return h[1], h[0] + 1


def _atom_word(atom, n: int) -> Word:
    return Word((atom,), n)


def conj_in_Q(g: Word, I) -> Word:
    """All-commutator word agreeing with ``g`` on ``I + Z``.

    Atom by atom: with ``J`` the current image of ``I``, an atom ``a`` is
    replaced by ``[k1, a]`` where ``k1^-1`` contracts ``J`` into the fixed gap
    of ``a``.
    """
    i0, i1 = (Fraction(x) for x in I)
    if i1 - i0 >= 1:
        raise TooWide(f"|I| = {i1 - i0} >= 1")
    n = g.base_n
    out: list = []
    j0, j1 = i0, i1
    for atom in g.atoms:
        aw = _atom_word(atom, n)
        amap = aw.evaluate()
        if isinstance(atom, Comm):
            out.append(atom)
        elif not amap.is_identity():
            gap = fixed_gap(amap)
            k1 = contract((j0, j1), gap, n).inverse()
            out.append(Comm(k1, aw))
        j0, j1 = amap.evaluate(j0), amap.evaluate(j1)
    h = Word(tuple(out), n)
    hf, gf = h.evaluate(), g.evaluate()
    if not agree_on(hf, gf, (i0, i1)):
        raise ConstructionFailed("conjugated word does not agree on I")
    return h


def special_in_Q(n: int, eps) -> Word:
    """``[g, f1]`` with ``f1`` special and supported in ``(-eps, eps) + Z``."""
    eps = Fraction(eps)
    if not 0 < eps < Fraction(1, 4):
        raise ValueError("eps must lie in (0, 1/4)")
    e = eta(n)
    k = 1
    while Fraction(n * e, e**k) >= eps or Fraction(n * e, e**k) >= Fraction(1, 3):
        k += 1
    f1 = xi_build(n, k)
    lo, hi = Fraction(-e, e**k), Fraction(n * e, e**k)
    g = contract((lo, hi), (Fraction(1, 2) - eps, Fraction(1, 2) + eps), n)
    w = comm_word(g, factor(f1, n))
    if not is_special(w.evaluate(), n):
        raise ConstructionFailed("commutator is not special")
    return w


# ----------------------------------------------------------------------
# simplicity witness


@dataclass(frozen=True)
class Witness:
    h1: Word
    h2: Word
    point: Fraction
    window: tuple[Fraction, Fraction]


def disjoint_mod1(a0, a1, b0, b1) -> bool:
    """Closed intervals ``[a0, a1] + Z`` and ``[b0, b1] + Z`` are disjoint."""
    for k in range(math.floor(b0 - a1) - 1, math.ceil(b1 - a0) + 2):
        if not (a1 + k < b0 or b1 < a0 + k):
            return False
    return True


def _inner_cone(a: Fraction, b: Fraction, e: int) -> tuple[Fraction, Fraction]:
    j = 0
    while True:
        size = Fraction(1, e**j)
        m = math.floor(a / size) + 1
        if (m + 1) * size < b:
            return m * size, (m + 1) * size
        j += 1


def simplicity_witness(f, n: int) -> Witness:
    """Commutators h1, h2 near a displaced point with ``[h1, [f, h2]] = [h1, h2] != 1``."""
    F = f.evaluate() if isinstance(f, Word) else as_periodic(f)
    if F.is_identity():
        raise TrivialInput("input evaluates to the identity")
    e = eta(n)
    xs = F.xs
    cands = list(xs[:-1]) + [(a + b) / 2 for a, b in zip(xs, xs[1:])]
    x = None
    for c in cands:
        if 0 < c < 1 and (F.evaluate(c) - c).denominator != 1:
            x = c
            break
    if x is None:
        raise ConstructionFailed("no displaced point found")
    delta = min(x, 1 - x) / 2
    while True:
        u0, u1 = x - delta, x + delta
        if disjoint_mod1(u0, u1, F.evaluate(u0), F.evaluate(u1)):
            break
        delta /= e
    c0, c1 = _inner_cone(u0, u1, e)
    psi = generator_set(n).psi
    pairs = [((0, 1), (1, 2)), ((0, 1), (0, 2)), ((0, 2), (1, 3))]
    emb = [f_word(cone_embed(p, (c0, c1), e), n) for p in psi[:4]]
    for (i, j), (k, l) in pairs:
        h1 = comm_word(emb[i], emb[j])
        h2 = comm_word(emb[k], emb[l])
        H1, H2 = h1.evaluate(), h2.evaluate()
        base = _comm(H1, H2)
        if base.is_identity():
            continue
        if _comm(H1, _comm(F, H2)) != base:
            raise ConstructionFailed("witness identity failed")
        return Witness(h1, h2, x, (u0, u1))
    raise ConstructionFailed("no non-commuting pair found")


def _comm(a: PeriodicPL, b: PeriodicPL) -> PeriodicPL:
    return a.inverse().then(b.inverse()).then(a).then(b)


# ----------------------------------------------------------------------
# normal generators


def is_stably_supported(f) -> bool:
    try:
        fixed_gap(f)
    except NotStablySupported:
        return False
    return True


def normal_gen_set(n: int) -> list[Word]:
    """``[psi_i, psi_j]`` for all i, j and ``[xi, psi_1]``, ``[xi, psi_eta]``."""
    gs = generator_set(n)
    psi = [f_word(p, n) for p in gs.psi]
    out = [comm_word(a, b) for a in psi for b in psi]
    out += [comm_word(xi_word(n), psi[0]), comm_word(xi_word(n), psi[-1])]
    for w in out:
        if not is_stably_supported(w.evaluate()):
            raise ConstructionFailed("normal generator is not stably supported")
    return out
