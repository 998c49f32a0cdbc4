"""Named, seeded verification suites driven by ``plgroups verify``.

Each suite returns a :class:`SuiteReport`; a suite passes iff it records
zero failures.  Random inputs come from a ``random.Random(seed)`` instance so
reruns are byte-identical.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .errors import CrossingCountMismatch, PLGroupError, UnknownSuite
from .exact import residue
from .gammaq import (
    FAtom,
    Word,
    Xi,
    diagonal_lift,
    eta,
    factor,
    generator_set,
    is_special,
    member_gamma,
    mush,
    xi_build,
)
from .gammaq.belk import belk_transform
from .gammaq.dynamics import conj_in_Q, disjoint_mod1, simplicity_witness, special_in_Q
from .gammaq.words import Comm
from .gammaq.rotation import translation_number
from .gammaq.special import slopes_between
from .plmap import CompactPL, PeriodicPL, agree_on, dumps, loads, power
from .thompson import (
    PairDiagram,
    Subdivision,
    chain_generators,
    check_chain,
    check_fast,
    fprime_necessary,
    member_Fn,
    multiply_pairs,
    orbit_class,
    orbit_map,
    pair_to_map,
    point_between,
    presentation_generator,
    push_map,
    tau,
    tuple_transport,
)


@dataclass
class SuiteReport:
    name: str
    cases: int = 0
    failures: int = 0
    elapsed: float = 0.0
    notes: list[str] = field(default_factory=list)

    def check(self, ok: bool, note: str = "") -> None:
        self.cases += 1
        if not ok:
            self.failures += 1
            if note and len(self.notes) < 10:
                self.notes.append(note)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def summary(self, timing: bool = True) -> str:
        head = f"{self.name}: {self.cases} cases, {self.failures} failures"
        return f"{head}, {self.elapsed:.2f}s" if timing else head


# ----------------------------------------------------------------------
# random inputs


def fn_generators(n: int) -> list[CompactPL]:
    gens = [presentation_generator(i, n).to_map() for i in range(n)]
    return gens + [g.inverse() for g in gens]


def random_fn(rng: random.Random, n: int, length: int = 4) -> CompactPL:
    gens = fn_generators(n)
    f = CompactPL.identity()
    for _ in range(rng.randint(0, length)):
        f = f.then(rng.choice(gens))
    return f


def random_gamma_word(rng: random.Random, n: int, length: int = 8, p_xi: float = 0.4) -> Word:
    gs = generator_set(n)
    atoms = []
    for _ in range(rng.randint(0, length)):
        if rng.random() < p_xi:
            atoms.append(Xi(rng.choice((1, -1))))
        else:
            p = rng.choice(gs.psi)
            atoms.append(FAtom(p if rng.random() < 0.5 else p.inverse()))
    return Word(tuple(atoms), n)


def random_nary(rng: random.Random, n: int, depth: int) -> Fraction:
    k = rng.randint(1, depth)
    return Fraction(rng.randint(1, n**k - 1), n**k)


def all_nary(n: int, depth: int) -> list[Fraction]:
    return sorted({Fraction(m, n**depth) for m in range(1, n**depth)})


def reachable_subdivisions(n: int, moves: int) -> list[Subdivision]:
    seen = {Subdivision.trivial(n)}
    frontier = list(seen)
    for _ in range(moves):
        nxt = []
        for J in frontier:
            for k in range(len(J)):
                K = tau(J, k)
                if K not in seen:
                    seen.add(K)
                    nxt.append(K)
        frontier = nxt
    return sorted(seen, key=lambda J: (len(J), J.cut_points))


def _class_index(x, n: int) -> int:
    r = residue(x, n)
    return r if r else n - 1


# ----------------------------------------------------------------------
# suites


def suite_axioms(n: int = 2, seed: int = 0, count: int = 1000, **_) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("axioms")
    ident = CompactPL.identity()
    for _ in range(count):
        f, g, h = (random_fn(rng, n) for _ in range(3))
        rep.check(f.then(g).then(h) == f.then(g.then(h)), "associativity")
        rep.check(f.then(f.inverse()) == ident and f.inverse().then(f) == ident, "inverse")
        rep.check(f.inverse().inverse() == f, "double inverse")
        (x0, y0), (x1, y1) = f.points[0], f.points[1]
        mid = ((x0 + x1) / 2, (y0 + y1) / 2)
        rep.check(CompactPL([f.points[0], mid, *f.points[1:]]) == f, "canonical form")
        x = Fraction(rng.randint(0, 999), 1000)
        lhs = f.then(g).one_sided_slope(x, "right")
        rhs = f.one_sided_slope(x, "right") * g.one_sided_slope(f(x), "right")
        rep.check(lhs == rhs, "chain rule")
        rep.check(loads(dumps(f, n))[0] == f, "serialization")
    for _ in range(max(1, count // 5)):
        a, b, c = (random_gamma_word(rng, n, 4).evaluate() for _ in range(3))
        rep.check(a.then(b).then(c) == a.then(b.then(c)), "periodic associativity")
        rep.check(a.then(a.inverse()).is_identity(), "periodic inverse")
        x = Fraction(rng.randint(-999, 999), 97)
        rep.check(a.evaluate(x + 1) == a.evaluate(x) + 1, "periodicity")
        u = Fraction(rng.randint(0, 99), 100)
        rep.check(a.evaluate(u + Fraction(99, 100)) - a.evaluate(u) < 1, "short intervals stay short")
    return rep


def suite_breakpoints_mod(n: int = 2, depth: int = 3, **_) -> SuiteReport:
    rep = SuiteReport("breakpoints-mod")
    mod = n - 1
    subs = reachable_subdivisions(n, depth)
    for J in subs:
        ivs = J.intervals()
        for a, b in ivs:
            rep.check((residue(b, n) - residue(a, n) - 1) % mod == 0, f"cone [{a}, {b}]")
        for pos, x in enumerate(J.cut_points, start=1):
            rep.check((_class_index(x, n) - pos) % mod == 0, f"position of {x}")
        for i in range(len(ivs)):
            for j in range(i, len(ivs)):
                lo, hi = ivs[i][0], ivs[j][1]
                rep.check((residue(hi, n) - residue(lo, n) - (j - i + 1)) % mod == 0, "count")
    for A in subs:
        for B in subs:
            for x in set(A.cut_points) & set(B.cut_points):
                rep.check((A.position(x) - B.position(x)) % mod == 0, f"shared {x}")
            if len(A) == len(B):
                f = pair_to_map(PairDiagram(A, B))
                for x in A.cut_points:
                    rep.check(residue(x, n) == residue(f(x), n), f"image of {x}")
    return rep


def suite_orbits(n: int = 2, depth: int = 4, seed: int = 0, count: int = 500, **_) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("orbits")
    for x in all_nary(n, depth):
        i = orbit_class(x, n).index
        f = orbit_map(x, n)
        rep.check(member_Fn(f, n) and f(x) == Fraction(i, n), f"orbit_map({x})")
    for _ in range(count):
        g = random_fn(rng, n, 6)
        for _ in range(20):
            x = random_nary(rng, n, depth + 2)
            rep.check(orbit_class(g(x), n) == orbit_class(x, n), f"class of {x}")
    return rep


def random_tuple_pair(rng: random.Random, n: int, length: int, depth: int):
    pool = all_nary(n, depth)
    s = sorted(rng.sample(pool, length))
    want = [orbit_class(x, n) for x in s]
    while True:
        t = sorted(rng.sample(pool, length))
        if [orbit_class(x, n) for x in t] == want:
            return s, t


def suite_transport(n: int = 2, depth: int = 4, seed: int = 0, count: int = 200, **_) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("transport")
    for _ in range(count):
        s, t = random_tuple_pair(rng, n, rng.randint(1, 4), depth)
        tr = tuple_transport(s, t, n)
        f = tr.map
        ok = all(f(a) == b for a, b in zip(s, t))
        ok = ok and fprime_necessary(f, n) and member_Fn(f, n)
        ok = ok and tr.certificate.evaluate() == f
        ok = ok and all(member_Fn(a, n) and member_Fn(b, n) for a, b in tr.certificate.factors)
        rep.check(ok, f"transport {s} -> {t}")
    return rep


def suite_gamma_membership(n: int = 2, seed: int = 0, count: int = 500, **_) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("gamma-membership")
    rep.check(member_gamma(PeriodicPL.identity(), n).membership_checked, "identity")
    rep.check(member_gamma(xi_build(n), n).membership_checked, "xi")
    try:
        member_gamma(PeriodicPL.translation(1), n)
        rep.check(False, "translation accepted")
    except CrossingCountMismatch:
        rep.check(True)
    if n == 2:
        xi = xi_build(2, 2).map
        rep.check(xi.evaluate(0) == Fraction(5, 18), "0.xi")
        rep.check(slopes_between(xi, Fraction(-1, 6), Fraction(1, 3)) == [6, 2, Fraction(1, 6)], "slopes")
    for _ in range(count):
        f = random_gamma_word(rng, n, 4).evaluate()
        g = random_gamma_word(rng, n, 4).evaluate()
        try:
            member_gamma(f.then(g), n)
            member_gamma(f.inverse(), n)
            rep.check(True)
        except PLGroupError as exc:
            rep.check(False, f"closure: {exc.token}")
    return rep


def random_special(rng: random.Random, n: int) -> PeriodicPL:
    """``g^-1 f`` for a random ``f`` with ``0.f`` in (0, 1) and ``g = mush(f)``."""
    while True:
        f = random_gamma_word(rng, n, 6, p_xi=0.5).evaluate()
        if 0 < f.evaluate(0) < 1:
            g = mush(f, n)
            return diagonal_lift(g, n).map.inverse().then(f)


def suite_special(n: int = 2, seed: int = 0, count: int = 200, **_) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("special")
    for m in (2, 3, 4):
        rep.check(is_special(xi_build(m), m), f"xi_build({m})")
    e = eta(n)
    eps_choices = [Fraction(1, 5), Fraction(1, 7), Fraction(1, 10), Fraction(1, 40)]
    for eps in eps_choices:
        f = special_in_Q(n, eps).evaluate()
        rep.check(is_special(f, n), f"special_in_Q eps={eps}")
        rep.check(_class_index(f.evaluate(0), e) == e - 1, "special_in_Q landing class")
    for _ in range(count):
        f = random_special(rng, n)
        ok = is_special(f, n) and _class_index(f.evaluate(0), e) == e - 1
        rep.check(ok, "mushed landing class")
    return rep


def suite_factorization(n: int = 2, seed: int = 0, count: int = 500, **_) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("factorization")
    for _ in range(count):
        g = random_gamma_word(rng, n, 8).evaluate()
        w = factor(g, n)
        rep.check(w.evaluate() == g, "round trip")
    return rep


def suite_relations(n: int = 2, max_index: int = 6, **_) -> SuiteReport:
    rep = SuiteReport("relations")
    top = max_index + n - 1
    P = [presentation_generator(i, n) for i in range(top + 1)]
    for i in range(max_index + 1):
        for j in range(i + 1, max_index + 1):
            lhs = multiply_pairs(multiply_pairs(P[i].inverse(), P[j]), P[i])
            rep.check(lhs == P[j + n - 1], f"f_{i}^-1 f_{j} f_{i}")
    rep.check(len(set(P)) == len(P), "distinct generators")
    return rep


def drift_element(rng: random.Random, n: int) -> PeriodicPL:
    """``xi`` followed by a diagonal push to the right; often fixed-point free."""
    e = eta(n)
    k = rng.randint(2, 3)
    a = Fraction(rng.randint(1, e**k // 4), e**k)
    r = residue(a, e)
    b = point_between(Fraction(3, 4), 1, e, res=r)
    return xi_build(n).map.then(diagonal_lift(push_map(0, 1, a, b, e), n).map)


def suite_rotnum(n: int = 2, seed: int = 0, count: int = 100, **_) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("rotnum")
    for f in (xi_build(n).map, PeriodicPL.identity()):
        r = translation_number(f, 16, 1)
        rep.check(r.exact == 0 and r.period == 1 and r.shift == 0, "fixed point")
    for i in range(count):
        if i % 2:
            f = random_gamma_word(rng, n, 6, p_xi=0.6).evaluate()
        else:
            f = drift_element(rng, n).then(random_gamma_word(rng, n, 2).evaluate())
        for m in (8, 16, 32):
            a = translation_number(f, m, 0).estimate
            b = translation_number(f, 2 * m, 0).estimate
            rep.check(abs(a - b) <= Fraction(3, 2 * m), "Cauchy bound")
        r = translation_number(f, 32, 3)
        if r.exact is None:
            continue
        rep.check(abs(r.estimate - r.exact) <= r.error_bound, "error bound")
        for k in (2, 3):
            rk = translation_number(power(f, k), 32, 3)
            if rk.exact is not None:
                rep.check(rk.exact == k * r.exact, "homogeneity")
    return rep


def suite_conj_q(n: int = 2, seed: int = 0, count: int = 100, **_) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("conj-q")
    for _ in range(count):
        g = random_gamma_word(rng, n, 5)
        a = Fraction(rng.randint(-40, 40), rng.randint(1, 40))
        I = (a, a + Fraction(rng.randint(0, 39), 40))
        h = conj_in_Q(g, I)
        rep.check(h.is_q_certified() and agree_on(h.evaluate(), g.evaluate(), I), f"I={I}")
    return rep


def random_q_word(rng: random.Random, n: int) -> Word:
    """A nontrivial all-commutator word."""
    while True:
        u = random_gamma_word(rng, n, 3)
        v = random_gamma_word(rng, n, 3)
        w = Word((Comm(u, v),), n)
        if not w.evaluate().is_identity():
            return w


def suite_witness(n: int = 2, seed: int = 0, count: int = 50, **_) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("witness")
    for i in range(count):
        f = special_in_Q(n, Fraction(1, 5)) if i == 0 else random_q_word(rng, n)
        w = simplicity_witness(f, n)
        F = f.evaluate()
        H1, H2 = w.h1.evaluate(), w.h2.evaluate()
        base = _comm(H1, H2)
        ok = not base.is_identity() and _comm(H1, _comm(F, H2)) == base
        u0, u1 = w.window
        ok = ok and disjoint_mod1(u0, u1, F.evaluate(u0), F.evaluate(u1))
        ok = ok and w.h1.is_q_certified() and w.h2.is_q_certified()
        rep.check(ok, f"witness {i}")
    return rep


def _comm(a: PeriodicPL, b: PeriodicPL) -> PeriodicPL:
    return a.inverse().then(b.inverse()).then(a).then(b)


def suite_belk(n: int = 2, seed: int = 0, count: int = 20, **_) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("belk")
    for _ in range(count):
        g = random_gamma_word(rng, 2, 6).evaluate()
        lo, hi = Fraction(1, 8), Fraction(4)
        samples = [lo + (hi - lo) * Fraction(rng.randint(0, 6**4), 6**4) for _ in range(50)]
        b = belk_transform(g, 2, 3, samples)
        rep.check(b.slopes_ok, "slopes")
        rep.check(b.ring_ok, "breakpoints")
        rep.check(b.doubling_ok, "doubling")
    return rep


def suite_chain(n: int | None = None, **_) -> SuiteReport:
    rep = SuiteReport("chain")
    for m in ((n,) if n else (2, 3, 6)):
        c = chain_generators(m)
        rep.check(check_chain(c.supports), f"chain pattern n={m}")
        rep.check(check_fast(c.generators, c.supports), f"fast n={m}")
        rep.check(all(member_Fn(g, m) for g in c.generators), f"membership n={m}")
    return rep


SUITES: dict[str, Callable[..., SuiteReport]] = {
    "axioms": suite_axioms,
    "breakpoints-mod": suite_breakpoints_mod,
    "orbits": suite_orbits,
    "transport": suite_transport,
    "gamma-membership": suite_gamma_membership,
    "special": suite_special,
    "factorization": suite_factorization,
    "relations": suite_relations,
    "rotnum": suite_rotnum,
    "conj-q": suite_conj_q,
    "witness": suite_witness,
    "belk": suite_belk,
    "chain": suite_chain,
}


def run_suite(name: str, **params) -> SuiteReport:
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}")
    params = {k: v for k, v in params.items() if v is not None}
    start = time.perf_counter()
    rep = SUITES[name](**params)
    rep.elapsed = time.perf_counter() - start
    return rep
