"""Higman-Thompson groups F_n acting on [0, 1].

Elements are carried either as :class:`~plgroups.plmap.CompactPL` maps or
as pairs of n-ary subdivisions (:class:`PairDiagram`).  Orbit classes,
point transport with commutator certificates, partial-map completion, cone
embeddings, chain generating sets and the generators of the infinite
presentation live here too.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    BadPartial,
    ConstructionFailed,
    IndexOutOfRange,
    InvalidSubdivision,
    NotACone,
    NotAnNaryInterval,
    NotInFn,
    NotInRing,
    OutOfRange,
    ParseError,
    SignatureMismatch,
)
from .exact import format_rational, in_ring, nary_depth, parse_rational, power_exponent, residue
from .plmap import CompactPL, IntervalPL, RIGHT, LEFT, commutator, support

# ----------------------------------------------------------------------
# cones and n-ary intervals


def is_cone(a, b, n: int) -> bool:
    """``[a, b] = [k/n^m, (k+1)/n^m]`` for some integers k and m >= 0."""
    a, b = Fraction(a), Fraction(b)
    if b <= a:
        return False
    e = power_exponent(b - a, n)
    if e is None or e > 0:
        return False
    return (a / (b - a)).denominator == 1


def cone_decompose(u, v, n: int) -> list[tuple[Fraction, Fraction]]:
    """Greedy left-to-right decomposition of ``[u, v]`` into maximal n-cones."""
    u, v = Fraction(u), Fraction(v)
    if not (in_ring(u, n) and in_ring(v, n)) or u >= v:
        raise NotAnNaryInterval(f"[{u}, {v}] is not an {n}-ary interval")
    out = []
    p = u
    while p < v:
        m = nary_depth(p, n)
        size = Fraction(1, n**m)
        while p + size > v:
            size /= n
        out.append((p, p + size))
        p += size
    return out


def _split_last(cones: list, n: int) -> list:
    a, b = cones[-1]
    step = (b - a) / n
    return cones[:-1] + [(a + i * step, a + (i + 1) * step) for i in range(n)]


def interval_map_points(u0, u1, v0, v1, n: int) -> list[tuple[Fraction, Fraction]]:
    """Graph of an F_n-type PL bijection ``[u0, u1] -> [v0, v1]``.

    Both intervals are split greedily into cones; the shorter list is padded
    by subdividing its rightmost cone until the counts agree, then cones are
    matched in order.  Raises BadPartial when the counts differ mod n-1.
    """
    src = cone_decompose(u0, u1, n)
    dst = cone_decompose(v0, v1, n)
    if (len(src) - len(dst)) % (n - 1):
        raise BadPartial(f"[{u0}, {u1}] and [{v0}, {v1}] have incompatible {n}-ary subdivisions")
    while len(src) < len(dst):
        src = _split_last(src, n)
    while len(dst) < len(src):
        dst = _split_last(dst, n)
    pts = [(src[0][0], dst[0][0])]
    pts += [(s[1], d[1]) for s, d in zip(src, dst)]
    return pts


def point_between(lo, hi, n: int, res: int | None = None, prefer: str = "mid") -> Fraction:
    """An n-ary rational strictly inside ``(lo, hi)``, optionally with a given residue.

    Searches depth by depth and returns the first hit at the shallowest depth.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        raise ValueError(f"empty interval ({lo}, {hi})")
    mod = n - 1
    for k in range(0, 200):
        scale = n**k
        lo_m = math.floor(lo * scale) + 1
        hi_m = math.ceil(hi * scale) - 1
        if lo_m > hi_m:
            continue
        if res is None or mod == 1:
            m = {"low": lo_m, "high": hi_m}.get(prefer, (lo_m + hi_m) // 2)
            return Fraction(m, scale)
        if prefer == "low":
            m = lo_m + (res - lo_m) % mod
        elif prefer == "high":
            m = hi_m - (hi_m - res) % mod
        else:
            mid = (lo_m + hi_m) // 2
            m = mid + (res - mid) % mod
            if m > hi_m:
                m = hi_m - (hi_m - res) % mod
        if lo_m <= m <= hi_m:
            return Fraction(m, scale)
    raise ConstructionFailed(f"no {n}-ary point found in ({lo}, {hi})")


def _dedupe(pts: list) -> list:
    out = []
    for p in pts:
        if not out or out[-1] != p:
            out.append(p)
    return out


def push_map(lo, hi, a, b, n: int) -> CompactPL:
    """F_n element supported in ``[lo, hi]`` sending ``a`` to ``b``.

    Built from ``[lo, a] -> [lo, b]`` and ``[a, hi] -> [b, hi]``; requires
    ``a`` and ``b`` to have the same residue mod n-1.
    """
    lo, hi, a, b = (Fraction(v) for v in (lo, hi, a, b))
    if not (0 <= lo < a < hi <= 1 and lo < b < hi):
        raise ValueError(f"push_map needs {lo} < {a}, {b} < {hi} inside [0, 1]")
    if a == b:
        return CompactPL.identity()
    pts = [(Fraction(0), Fraction(0))]
    pts += interval_map_points(lo, a, lo, b, n)
    pts += interval_map_points(a, hi, b, hi, n)[1:]
    pts.append((Fraction(1), Fraction(1)))
    return CompactPL(_dedupe(pts))


def into_window(u0, u1, c, d, n: int) -> CompactPL:
    """F_n element mapping ``[u0, u1]`` (inside (0, 1)) into the open window ``(c, d)``.

    ``u0, u1`` may be arbitrary rationals; the breakpoints are n-ary.
    """
    u0, u1, c, d = (Fraction(v) for v in (u0, u1, c, d))
    if not (0 < u0 <= u1 < 1 and 0 <= c < d <= 1):
        raise ValueError("into_window needs 0 < u0 <= u1 < 1 and a window inside [0, 1]")
    a = point_between(0, u0, n, prefer="high")
    b = point_between(u1, 1, n, prefer="low")
    a2 = point_between(c, d, n, res=residue(a, n), prefer="low")
    b2 = point_between(a2, d, n, res=residue(b, n), prefer="high")
    pts = interval_map_points(0, a, 0, a2, n)
    pts += interval_map_points(a, b, a2, b2, n)[1:]
    pts += interval_map_points(b, 1, b2, 1, n)[1:]
    return CompactPL(pts)


# ----------------------------------------------------------------------
# subdivisions and pair diagrams


@dataclass(frozen=True)
class Subdivision:
    """n-ary subdivision of [0, 1], given by its interior cut points."""

    base_n: int
    cut_points: tuple[Fraction, ...] = ()

    def __post_init__(self):
        cuts = tuple(Fraction(c) for c in self.cut_points)
        object.__setattr__(self, "cut_points", cuts)
        ends = (Fraction(0),) + cuts + (Fraction(1),)
        for a, b in zip(ends, ends[1:]):
            if not is_cone(a, b, self.base_n):
                raise InvalidSubdivision(f"[{a}, {b}] is not a {self.base_n}-cone")

    @classmethod
    def trivial(cls, n: int) -> "Subdivision":
        return cls(n, ())

    @classmethod
    def uniform(cls, n: int, depth: int) -> "Subdivision":
        return cls(n, tuple(Fraction(i, n**depth) for i in range(1, n**depth)))

    def endpoints(self) -> tuple[Fraction, ...]:
        return (Fraction(0),) + self.cut_points + (Fraction(1),)

    def intervals(self) -> list[tuple[Fraction, Fraction]]:
        e = self.endpoints()
        return list(zip(e, e[1:]))

    def __len__(self) -> int:
        return len(self.cut_points) + 1

    def position(self, x) -> int | None:
        """Position of a breakpoint (1-based from the left), or None."""
        try:
            return self.cut_points.index(Fraction(x)) + 1
        except ValueError:
            return None

    def __str__(self):
        cuts = " ".join(format_rational(c) for c in self.cut_points)
        return f"subdiv n={self.base_n}: {cuts}".rstrip()


def tau(J: Subdivision, k: int) -> Subdivision:
    """Replace the k-th interval of J by its regular n-ary subdivision."""
    if not 0 <= k < len(J):
        raise IndexOutOfRange(f"tau_{k} undefined on a subdivision with {len(J)} intervals")
    n = J.base_n
    a, b = J.intervals()[k]
    new = [a + i * (b - a) / n for i in range(1, n)]
    cuts = list(J.cut_points)
    cuts[k:k] = new
    return Subdivision(n, tuple(cuts))


def _collapsible(ivs, i: int, n: int) -> bool:
    a, b = ivs[i]
    size = b - a
    if (a / (n * size)).denominator != 1:
        return False
    return all(ivs[i + j][1] - ivs[i + j][0] == size for j in range(n))


def _collapse(J: Subdivision, i: int) -> Subdivision:
    n = J.base_n
    cuts = list(J.cut_points)
    # intervals i..i+n-1 share the n-1 interior cuts at indices i..i+n-2
    del cuts[i : i + n - 1]
    return Subdivision(n, tuple(cuts))


@dataclass(frozen=True)
class PairDiagram:
    """Ordered pair of n-ary subdivisions with the same number of intervals."""

    domain_subdivision: Subdivision
    range_subdivision: Subdivision

    def __post_init__(self):
        d, r = self.domain_subdivision, self.range_subdivision
        if d.base_n != r.base_n:
            raise InvalidSubdivision("pair diagram mixes bases")
        if len(d) != len(r):
            raise InvalidSubdivision(f"pair sizes differ: {len(d)} vs {len(r)}")

    @property
    def base_n(self) -> int:
        return self.domain_subdivision.base_n

    def reduced(self) -> "PairDiagram":
        """Leftmost-first simultaneous collapse until no carets cancel."""
        d, r = self.domain_subdivision, self.range_subdivision
        n = d.base_n
        i = 0
        while i + n <= len(d):
            if _collapsible(d.intervals(), i, n) and _collapsible(r.intervals(), i, n):
                d, r = _collapse(d, i), _collapse(r, i)
                i = 0
            else:
                i += 1
        return PairDiagram(d, r)

    def is_reduced(self) -> bool:
        return self.reduced() == self

    def inverse(self) -> "PairDiagram":
        return PairDiagram(self.range_subdivision, self.domain_subdivision)

    def to_map(self) -> CompactPL:
        return pair_to_map(self)

    def __str__(self):
        return f"{self.domain_subdivision}\n{self.range_subdivision}"


def pair_to_map(P: PairDiagram) -> CompactPL:
    return CompactPL(zip(P.domain_subdivision.endpoints(), P.range_subdivision.endpoints()))


def tau_pair(P: PairDiagram, k: int) -> PairDiagram:
    return PairDiagram(tau(P.domain_subdivision, k), tau(P.range_subdivision, k))


def member_Fn(f, n: int) -> bool:
    """Slopes in {n^m}; breakpoints (and their images) in Z[1/n]."""
    if not isinstance(f, CompactPL):
        return False
    if any(power_exponent(s, n) is None for s in f.slopes()):
        return False
    return all(in_ring(x, n) and in_ring(y, n) for x, y in f.points)


def member_Fnr(h: IntervalPL, n: int, r: int) -> bool:
    """Membership in F_{n,r}: PL self-map of [0, r] with n-power slopes, n-ary breakpoints."""
    if h.domain != (0, r) or h.image != (0, r):
        return False
    if any(power_exponent(s, n) is None for s in h.slopes()):
        return False
    return all(in_ring(x, n) and in_ring(y, n) for x, y in h.points)


def map_to_pair(f: CompactPL, n: int) -> PairDiagram:
    """Reduced pair diagram of an F_n element."""
    if not member_Fn(f, n):
        raise NotInFn(f"map is not in F_{n}")
    bps = f.breakpoints()
    dom: list[tuple[Fraction, Fraction]] = []
    stack = [(Fraction(0), Fraction(1))]
    while stack:
        a, b = stack.pop()
        linear = not any(a < x < b for x in bps)
        if linear and is_cone(f(a), f(b), n):
            dom.append((a, b))
            continue
        step = (b - a) / n
        for i in reversed(range(n)):
            stack.append((a + i * step, a + (i + 1) * step))
    dcuts = tuple(b for _, b in dom[:-1])
    rcuts = tuple(f(x) for x in dcuts)
    return PairDiagram(Subdivision(n, dcuts), Subdivision(n, rcuts)).reduced()


def _refine_range(P: PairDiagram, K: Subdivision) -> PairDiagram:
    target = K.intervals()
    while True:
        cur = P.range_subdivision.intervals()
        if cur == target:
            return P
        for i, (c, t) in enumerate(zip(cur, target)):
            if c != t:
                P = tau_pair(P, i)
                break


def multiply_pairs(P: PairDiagram, Q: PairDiagram) -> PairDiagram:
    """Reduced pair for ``P`` followed by ``Q``, via a common middle subdivision."""
    n = P.base_n
    if Q.base_n != n:
        raise ValueError("bases differ")
    cuts = set(P.range_subdivision.cut_points) | set(Q.domain_subdivision.cut_points)
    K = Subdivision(n, tuple(sorted(cuts)))
    P2 = _refine_range(P, K)
    Q2 = _refine_range(Q.inverse(), K).inverse()
    return PairDiagram(P2.domain_subdivision, Q2.range_subdivision).reduced()


def parse_subdivision(line: str) -> Subdivision:
    head, _, body = line.partition(":")
    parts = head.split()
    if len(parts) != 2 or parts[0] != "subdiv" or not parts[1].startswith("n="):
        raise ParseError(f"bad subdivision line {line!r}")
    n = int(parts[1][2:])
    return Subdivision(n, tuple(parse_rational(t) for t in body.split()))


def parse_pair(text: str) -> PairDiagram:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 2:
        raise ParseError("a pair diagram is two subdiv lines")
    return PairDiagram(parse_subdivision(lines[0]), parse_subdivision(lines[1]))


# ----------------------------------------------------------------------
# orbits


@dataclass(frozen=True)
class OrbitClass:
    index: int
    base_n: int

    def __str__(self):
        return f"O_{self.index}"


def orbit_class(x, n: int) -> OrbitClass:
    x = Fraction(x)
    if not in_ring(x, n):
        raise NotInRing(f"{x} is not in Z[1/{n}]")
    if not 0 < x < 1:
        raise OutOfRange(f"{x} is not in (0, 1)")
    r = residue(x, n)
    return OrbitClass(r if r else n - 1, n)


def orbit_map(x, n: int) -> CompactPL:
    """Element of F_n sending ``x`` in ``O_i`` to ``i/n``."""
    i = orbit_class(x, n).index
    k = nary_depth(x, n)
    m = int(Fraction(x) * n**k)
    J1 = Subdivision.uniform(n, k)
    # range: tau_0 applied (m - i)/(n - 1) times to the regular subdivision,
    # then the rightmost interval is split until the sizes agree
    depth = (m - i) // (n - 1) + 1
    ivs = [(Fraction(0), Fraction(1, n**depth))]
    for d in range(depth, 0, -1):
        ivs += [(Fraction(j, n**d), Fraction(j + 1, n**d)) for j in range(1, n)]
    while len(ivs) < len(J1):
        ivs = _split_last(ivs, n)
    K = Subdivision(n, tuple(b for _, b in ivs[:-1]))
    f = pair_to_map(PairDiagram(J1, K))
    if f(x) != Fraction(i, n):
        raise ConstructionFailed(f"orbit_map({x}) landed at {f(x)}")
    return f


# ----------------------------------------------------------------------
# commutator certificates and tuple transport


@dataclass(frozen=True)
class CommutatorProduct:
    """Product ``[a_1, b_1] [a_2, b_2] ...`` of commutators of F_n elements."""

    factors: tuple[tuple[CompactPL, CompactPL], ...] = ()

    def evaluate(self) -> CompactPL:
        out = CompactPL.identity()
        for a, b in self.factors:
            out = out.then(commutator(a, b))
        return out

    def inverse(self) -> "CommutatorProduct":
        return CommutatorProduct(tuple((b, a) for a, b in reversed(self.factors)))

    def __add__(self, other: "CommutatorProduct") -> "CommutatorProduct":
        return CommutatorProduct(self.factors + other.factors)

    def __len__(self):
        return len(self.factors)


@dataclass(frozen=True)
class Transport:
    map: CompactPL
    certificate: CommutatorProduct


def _commutator_pushing(u: Fraction, v: Fraction, lo: Fraction, c: Fraction, n: int):
    """``[k1, h]`` supported in ``(lo, 1)`` sending both u and v into ``(c, 1)``."""
    m_lo, m_hi = min(u, v), max(u, v)
    L = point_between(lo, m_lo, n)
    a = point_between(L, m_lo, n)
    R = point_between(max(m_hi, c), 1, n)
    a2 = point_between(max(c, a), R, n, res=residue(a, n))
    h = push_map(L, R, a, a2, n)
    L0 = point_between(lo, L, n)
    L2 = point_between(m_hi, 1, n, res=residue(L, n))
    k1 = push_map(L0, 1, L, L2, n)
    return k1, h


def _commutator_moving(y: Fraction, z: Fraction, n: int):
    """``[k1, h]`` in F_n' with compact support sending y to z (same class)."""
    L = point_between(0, min(y, z), n)
    R = point_between(max(y, z), 1, n)
    h = push_map(L, R, y, z, n)
    L2 = point_between(y, 1, n, res=residue(L, n))
    k1 = push_map(0, 1, L, L2, n)
    return k1, h


def cone_embed(f: CompactPL, cone, n: int) -> CompactPL:
    """Copy of ``f`` acting on the n-cone ``cone`` (linear rescaling), identity elsewhere."""
    a, b = (Fraction(v) for v in cone)
    if not (0 <= a < b <= 1 and is_cone(a, b, n)):
        raise NotACone(f"[{a}, {b}] is not a {n}-cone")
    L = b - a
    pts = [(Fraction(0), Fraction(0))]
    pts += [(a + L * x, a + L * y) for x, y in f.points]
    pts.append((Fraction(1), Fraction(1)))
    return CompactPL(_dedupe(pts))


def tuple_transport(s: Sequence, t: Sequence, n: int) -> Transport:
    """F_n' element sending the increasing tuple ``s`` onto ``t`` pointwise.

    Induction on the tuple length: with the prefix already transported, both
    remaining points are pushed by a commutator into the deep right cone
    ``[(n^k - 1)/n^k, 1]`` and matched there by a cone-embedded commutator.
    """
    s = [Fraction(v) for v in s]
    t = [Fraction(v) for v in t]
    if len(s) != len(t):
        raise SignatureMismatch("tuples have different lengths")
    for tup in (s, t):
        if any(b <= a for a, b in zip(tup, tup[1:])):
            raise ValueError("tuples must be strictly increasing")
    for a, b in zip(s, t):
        if orbit_class(a, n) != orbit_class(b, n):
            raise SignatureMismatch(f"{a} and {b} lie in different orbits")

    g = CompactPL.identity()
    cert = CommutatorProduct()
    lo = Fraction(0)
    for sm, tm in zip(s, t):
        u = g(sm)
        if u != tm:
            k = 1
            while not lo < Fraction(n**k - 1, n**k):
                k += 1
            c = Fraction(n**k - 1, n**k)
            step_factors = []
            g2 = CompactPL.identity()
            if not (u > c and tm > c):
                k1, h = _commutator_pushing(u, tm, lo, c, n)
                g2 = commutator(k1, h)
                step_factors.append((k1, h))
            u2, v2 = g2(u), g2(tm)
            ka, hb = _commutator_moving((u2 - c) * n**k, (v2 - c) * n**k, n)
            ka, hb = cone_embed(ka, (c, 1), n), cone_embed(hb, (c, 1), n)
            step_factors.append((ka, hb))
            if g2 != CompactPL.identity():
                step_factors.append((h, k1))
            step = CommutatorProduct(tuple(step_factors))
            g = g.then(step.evaluate())
            cert = cert + step
        lo = tm
    if any(g(a) != b for a, b in zip(s, t)) or cert.evaluate() != g:
        raise ConstructionFailed("transport did not verify")
    return Transport(g, cert)


def fprime_necessary(f: CompactPL, n: int) -> bool:
    """Germ test: slope 1 at both ends and support closure inside (0, 1)."""
    if f.one_sided_slope(0, RIGHT) != 1 or f.one_sided_slope(1, LEFT) != 1:
        return False
    supp = support(f)
    if supp.is_empty():
        return True
    return supp.intervals[0][0] > 0 and supp.intervals[-1][1] < 1


# ----------------------------------------------------------------------
# partial maps and n-ary interval conjugation


def _check_partial(pts: list, n: int) -> None:
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        if not (x1 > x0 and y1 > y0):
            raise BadPartial("partial map must be increasing")
        if power_exponent((y1 - y0) / (x1 - x0), n) is None:
            raise BadPartial(f"slope {(y1 - y0) / (x1 - x0)} is not a power of {n}")
    for x, y in pts:
        if not (in_ring(x, n) and in_ring(y, n)):
            raise BadPartial(f"breakpoint ({x}, {y}) not in Z[1/{n}]")
        if not (0 <= x <= 1 and 0 <= y <= 1):
            raise BadPartial("partial map leaves [0, 1]")


def extend_partial(f_part, n: int) -> CompactPL:
    """Extend a PL bijection ``[p, q] -> [p2, q2]`` inside [0, 1] to an F_n element."""
    pts = list(f_part.points) if hasattr(f_part, "points") else [(Fraction(x), Fraction(y)) for x, y in f_part]
    _check_partial(pts, n)
    (p, p2), (q, q2) = pts[0], pts[-1]
    if (p == 0) != (p2 == 0) or (q == 1) != (q2 == 1):
        raise BadPartial("partial map must send endpoints of [0, 1] to themselves")
    full = []
    if p > 0:
        full += interval_map_points(0, p, 0, p2, n)[:-1]
    full += pts
    if q < 1:
        full += interval_map_points(q, 1, q2, 1, n)[1:]
    return CompactPL(full)


def complete_partial(f1, n: int) -> CompactPL:
    """Extend ``f1: [0, r1] -> [0, r2]`` to an element of F_n."""
    pts = list(f1.points) if hasattr(f1, "points") else [(Fraction(x), Fraction(y)) for x, y in f1]
    if pts[0] != (0, 0):
        raise BadPartial("partial map must start at (0, 0)")
    r1, r2 = pts[-1]
    if not (0 < r1 < 1 and 0 < r2 < 1):
        raise BadPartial("r1, r2 must lie in (0, 1)")
    g = extend_partial(pts, n)
    return g


def interval_conj(J, n: int, cones: Sequence | None = None) -> IntervalPL:
    """PL map ``phi: J -> [0, l]`` sending the i-th cone of an n-ary subdivision onto ``[i-1, i]``."""
    x0, x1 = (Fraction(v) for v in J)
    if not (0 <= x0 < x1 <= 1 and in_ring(x0, n) and in_ring(x1, n)):
        raise NotAnNaryInterval(f"[{x0}, {x1}] is not an {n}-ary interval")
    if cones is None:
        cones = cone_decompose(x0, x1, n)
    cones = [(Fraction(a), Fraction(b)) for a, b in cones]
    if cones[0][0] != x0 or cones[-1][1] != x1:
        raise NotAnNaryInterval("cones do not cover J")
    for (a, b), nxt in zip(cones, cones[1:] + [None]):
        if not is_cone(a, b, n) or (nxt is not None and nxt[0] != b):
            raise NotAnNaryInterval("not an n-ary subdivision of J")
    pts = [(cones[0][0], Fraction(0))] + [(b, Fraction(i + 1)) for i, (_, b) in enumerate(cones)]
    return IntervalPL(pts)


def conjugate_rstab(g: CompactPL, phi: IntervalPL) -> IntervalPL:
    """``phi^-1 g phi`` as a self-map of ``[0, l]``; g must fix the complement of J."""
    x0, x1 = phi.domain
    if g(x0) != x0 or g(x1) != x1:
        raise ValueError("g does not preserve J")
    return phi.inverse().then(g.restrict(x0, x1)).then(phi)


# ----------------------------------------------------------------------
# chain generating sets


@dataclass(frozen=True)
class ChainSet:
    base_n: int
    generators: tuple[CompactPL, ...]
    supports: tuple[tuple[Fraction, Fraction], ...]
    chain_ok: bool
    fast_ok: bool
    fast_point: Fraction


def check_chain(supports: Sequence[tuple[Fraction, Fraction]]) -> bool:
    """Interval pattern of a chain plus ``inf J_1 = 0`` and ``sup J_n = 1``."""
    k = len(supports)
    if supports[0][0] != 0 or supports[-1][1] != 1:
        return False
    for i in range(k - 1):
        (a0, b0), (a1, b1) = supports[i], supports[i + 1]
        if not (a0 < a1 < b0 < b1):
            return False
    for i in range(k):
        for j in range(i + 2, k):
            if supports[i][1] > supports[j][0]:
                return False
    return True


def fast_point(generators: Sequence[CompactPL], supports) -> Fraction:
    x = supports[1][0]
    for g in generators:
        x = g(x)
    return x


def check_fast(generators: Sequence[CompactPL], supports) -> bool:
    """``x . f_1 ... f_n >= y`` with ``x = inf J_2`` and ``y = sup J_{n-1}``."""
    return fast_point(generators, supports) >= supports[-2][1]


def chain_generators(n: int) -> ChainSet:
    """Deterministic chain of n pushes with supports snapped to depth-2 n-ary points."""
    if n < 2:
        raise ValueError("n must be >= 2")
    gens, sups = [], []
    for i in range(1, n + 1):
        lo = Fraction(i - 1, n)
        hi = Fraction(1) if i == n else Fraction(i, n) + Fraction(1, n * n)
        p = lo + Fraction(1, n**3)
        q = point_between(hi - Fraction(1, 2 * n * n), hi, n, res=residue(p, n), prefer="high")
        gens.append(push_map(lo, hi, p, q, n))
        sups.append((lo, hi))
    for g, (lo, hi) in zip(gens, sups):
        supp = support(g)
        if supp.intervals != ((lo, hi),) or not member_Fn(g, n):
            raise ConstructionFailed("chain generator has unexpected support")
    chain_ok = check_chain(sups)
    fast_ok = check_fast(gens, sups)
    if not (chain_ok and fast_ok):
        raise ConstructionFailed(f"chain construction failed for n={n}")
    return ChainSet(n, tuple(gens), tuple(sups), chain_ok, fast_ok, fast_point(gens, sups))


# ----------------------------------------------------------------------
# generators of the infinite presentation


def _vine(n: int, carets: int) -> Subdivision:
    J = Subdivision.trivial(n)
    for _ in range(carets):
        J = tau(J, len(J) - 1)
    return J


def presentation_generator(i: int, n: int) -> PairDiagram:
    """Generator ``f_i`` satisfying ``f_i^-1 f_j f_i = f_{j+n-1}`` for ``i < j``.

    Leaf ``i`` of the right vine carries an extra caret in the domain tree;
    the range tree is one caret deeper along the vine.
    """
    if i < 0:
        raise IndexOutOfRange("generator index must be non-negative")
    depth = i // (n - 1) + 1
    dom = tau(_vine(n, depth), i)
    rng = _vine(n, depth + 1)
    return PairDiagram(dom, rng).reduced()


def pair_power_inverse(P: PairDiagram) -> PairDiagram:
    return P.inverse()
