from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from plgroups.errors import (
    BadPartial,
    IndexOutOfRange,
    InvalidSubdivision,
    NotACone,
    NotAnNaryInterval,
    NotInFn,
    NotInRing,
    OutOfRange,
    SignatureMismatch,
)
from plgroups.exact import in_ring
from plgroups.plmap import CompactPL, IntervalPL, agree_on, compose, support
from plgroups.suites import random_fn, suite_breakpoints_mod
from plgroups.thompson import (
    PairDiagram,
    Subdivision,
    chain_generators,
    check_chain,
    check_fast,
    complete_partial,
    cone_decompose,
    cone_embed,
    conjugate_rstab,
    fprime_necessary,
    interval_conj,
    is_cone,
    map_to_pair,
    member_Fn,
    member_Fnr,
    multiply_pairs,
    orbit_class,
    orbit_map,
    pair_to_map,
    parse_pair,
    presentation_generator,
    push_map,
    tau,
    tau_pair,
    tuple_transport,
)

F = Fraction

# x_0 read from its pair: [0,1/2] -> [0,1/4], [1/2,3/4] -> [1/4,1/2], [3/4,1] -> [1/2,1]
X0_INV = CompactPL([(0, 0), (F(1, 2), F(1, 4)), (F(3, 4), F(1, 2)), (1, 1)])

seeds = st.integers(0, 10**9)


def test_tau_examples():
    T = Subdivision.trivial(2)
    assert tau(T, 0).cut_points == (F(1, 2),)
    T3 = tau(tau(Subdivision.trivial(3), 0), 2)
    assert T3.cut_points == (F(1, 3), F(2, 3), F(7, 9), F(8, 9))
    with pytest.raises(IndexOutOfRange):
        tau(Subdivision.trivial(2), 1)
    assert len(tau(T3, 1)) == len(T3) + 2


def test_subdivision_validation_and_text():
    with pytest.raises(InvalidSubdivision):
        Subdivision(2, (F(1, 3),))
    with pytest.raises(InvalidSubdivision):
        Subdivision(2, (F(1, 4),))
    P = PairDiagram(Subdivision(2, (F(1, 2), F(3, 4))), Subdivision(2, (F(1, 4), F(1, 2))))
    assert str(P) == "subdiv n=2: 1/2 3/4\nsubdiv n=2: 1/4 1/2"
    assert parse_pair(str(P)) == P


def test_pair_to_map_examples():
    J = Subdivision(2, (F(1, 2), F(3, 4)))
    assert pair_to_map(PairDiagram(J, J)).is_identity()
    P = PairDiagram(J, Subdivision(2, (F(1, 4), F(1, 2))))
    f = pair_to_map(P)
    assert f == X0_INV
    assert f.slopes() == [F(1, 2), 1, 2]


def test_map_to_pair_examples():
    ident = map_to_pair(CompactPL.identity(), 2)
    assert ident.domain_subdivision == ident.range_subdivision == Subdivision.trivial(2)
    P = map_to_pair(X0_INV, 2)
    assert P.domain_subdivision.cut_points == (F(1, 2), F(3, 4))
    assert P.range_subdivision.cut_points == (F(1, 4), F(1, 2))
    with pytest.raises(NotInFn):
        map_to_pair(CompactPL([(0, 0), (F(1, 4), F(3, 4)), (1, 1)]), 2)


def test_member_fn_examples():
    assert member_Fn(CompactPL.identity(), 2)
    assert member_Fn(X0_INV, 2)
    assert not member_Fn(X0_INV, 3)


@pytest.mark.parametrize("n", [2, 3])
@settings(max_examples=40, deadline=None)
@given(seed=seeds)
def test_pair_round_trips(n, seed):
    rng = random.Random(seed)
    f, g = random_fn(rng, n), random_fn(rng, n)
    P, Qd = map_to_pair(f, n), map_to_pair(g, n)
    assert P.is_reduced()
    assert pair_to_map(P) == f
    assert multiply_pairs(P, Qd) == map_to_pair(compose(f, g), n)
    assert multiply_pairs(P, P.inverse()) == map_to_pair(CompactPL.identity(), n)
    k = rng.randrange(len(P.domain_subdivision))
    assert pair_to_map(tau_pair(P, k)) == f
    assert tau_pair(P, k).reduced() == P


def test_orbit_class_examples():
    assert str(orbit_class(F(5, 9), 3)) == "O_1"
    assert str(orbit_class(F(2, 3), 3)) == "O_2"
    assert str(orbit_class(F(10, 36), 6)) == "O_5"
    with pytest.raises(NotInRing):
        orbit_class(F(1, 3), 2)
    with pytest.raises(OutOfRange):
        orbit_class(F(3, 2), 2)


def test_orbit_map_examples():
    assert orbit_map(F(1, 2), 2).is_identity()
    assert orbit_map(F(1, 3), 3).is_identity()
    f = orbit_map(F(3, 4), 2)
    assert member_Fn(f, 2) and f(F(3, 4)) == F(1, 2)
    g = orbit_map(F(7, 27), 3)
    assert g(F(7, 27)) == F(orbit_class(F(7, 27), 3).index, 3)


@pytest.mark.parametrize("n", [2, 3, 4])
@settings(max_examples=30, deadline=None)
@given(seed=seeds)
def test_orbit_class_preserved(n, seed):
    rng = random.Random(seed)
    g = random_fn(rng, n, 6)
    x = F(rng.randint(1, n**5 - 1), n**5)
    assert orbit_class(g(x), n) == orbit_class(x, n)


def test_transport_examples():
    tr = tuple_transport([F(1, 4)], [F(1, 4)], 2)
    assert tr.map.is_identity() and len(tr.certificate) == 0
    tr = tuple_transport([F(1, 4)], [F(3, 4)], 2)
    assert tr.map(F(1, 4)) == F(3, 4)
    assert tr.map.one_sided_slope(0, "right") == 1 == tr.map.one_sided_slope(1, "left")
    assert fprime_necessary(tr.map, 2)
    assert tr.certificate.evaluate() == tr.map
    with pytest.raises(SignatureMismatch):
        tuple_transport([F(1, 3)], [F(2, 3)], 3)


def test_transport_long_tuple():
    s = [F(1, 27), F(2, 9), F(5, 9), F(25, 27)]
    t = [F(13, 27), F(20, 27), F(7, 9), F(79, 81)]
    assert [orbit_class(x, 3) for x in s] == [orbit_class(x, 3) for x in t]
    tr = tuple_transport(s, t, 3)
    assert [tr.map(x) for x in s] == t
    assert fprime_necessary(tr.map, 3)
    assert all(member_Fn(a, 3) and member_Fn(b, 3) for a, b in tr.certificate.factors)


def test_complete_partial_examples():
    half = IntervalPL([(0, 0), (F(1, 2), F(1, 2))])
    g = complete_partial(half, 2)
    assert agree_on(g, CompactPL.identity(), (0, F(1, 2)))
    f1 = IntervalPL([(0, 0), (F(1, 2), F(1, 4))])
    g = complete_partial(f1, 2)
    assert member_Fn(g, 2)
    assert g.points == ((0, 0), (F(1, 2), F(1, 4)), (F(3, 4), F(1, 2)), (1, 1))
    with pytest.raises(BadPartial):
        complete_partial(IntervalPL([(0, 0), (F(1, 8), F(5, 8))]), 2)
    with pytest.raises(BadPartial):
        complete_partial(IntervalPL([(0, 0), (F(1, 2), F(1, 2))]), 3)


@settings(max_examples=40, deadline=None)
@given(seed=seeds)
def test_complete_partial_agrees(seed):
    rng = random.Random(seed)
    f = random_fn(rng, 3, 5)
    r1 = F(rng.randint(1, 26), 27)
    r2 = f(r1)
    if not 0 < r2 < 1:
        return
    part = f.restrict(0, r1)
    g = complete_partial(part, 3)
    assert member_Fn(g, 3) and agree_on(g, f, (0, r1))


def test_cone_embed_examples():
    assert cone_embed(CompactPL.identity(), (F(1, 4), F(1, 2)), 2).is_identity()
    g = cone_embed(X0_INV, (0, F(1, 2)), 2)
    assert g.breakpoints() == [F(1, 4), F(3, 8), F(1, 2)]
    assert agree_on(g, CompactPL.identity(), (F(1, 2), 1))
    with pytest.raises(NotACone):
        cone_embed(X0_INV, (F(1, 4), F(3, 4)), 2)


@settings(max_examples=40, deadline=None)
@given(seed=seeds)
def test_cone_embed_support(seed):
    rng = random.Random(seed)
    f = random_fn(rng, 2, 5)
    k = rng.randint(1, 3)
    m = rng.randrange(2**k)
    a, b = F(m, 2**k), F(m + 1, 2**k)
    g = cone_embed(f, (a, b), 2)
    assert member_Fn(g, 2)
    assert all(a <= lo and hi <= b for lo, hi in support(g).intervals)


def test_interval_conj_examples():
    phi = interval_conj((0, 1), 2)
    assert phi.points == ((0, 0), (1, 1))
    phi = interval_conj((F(1, 4), F(3, 4)), 2, [(F(1, 4), F(1, 2)), (F(1, 2), F(3, 4))])
    assert phi(F(1, 2)) == 1 and phi.slopes() == [4]
    with pytest.raises(NotAnNaryInterval):
        interval_conj((F(1, 3), F(1, 2)), 2)


def test_interval_conj_carries_rstab_into_fnr():
    J = (F(1, 4), F(1, 2) + F(1, 8))
    phi = interval_conj(J, 2)
    cones = cone_decompose(*J, 2)
    assert len(cones) == phi.image[1]
    g = push_map(J[0], J[1], F(5, 16), F(9, 16), 2)
    h = conjugate_rstab(g, phi)
    assert member_Fnr(h, 2, len(cones))


def test_chain_generators():
    c = chain_generators(2)
    (a0, b0), (a1, b1) = c.supports
    assert a0 == 0 and b1 == 1 and a1 < b0
    assert [support(g).intervals for g in c.generators] == [((a0, b0),), ((a1, b1),)]
    for n in (2, 3, 4, 6):
        c = chain_generators(n)
        assert check_chain(c.supports) and check_fast(c.generators, c.supports)
        assert all(member_Fn(g, n) for g in c.generators)
        assert all(in_ring(x, n) for J in c.supports for x in J)
        for i in range(n):
            for j in range(i + 2, n):
                assert c.supports[i][1] <= c.supports[j][0]


def test_check_chain_rejects_bad_patterns():
    assert not check_chain([(F(0), F(1, 2)), (F(1, 2), F(1))])
    assert not check_chain([(F(1, 8), F(1, 2)), (F(1, 4), F(1))])
    assert not check_chain([(F(0), F(1, 2)), (F(1, 4), F(3, 4)), (F(3, 8), F(1))])


@pytest.mark.parametrize("n", [2, 3])
def test_presentation_relations(n):
    P = [presentation_generator(i, n) for i in range(6 + n)]
    for i in range(7):
        for j in range(i + 1, 7):
            assert multiply_pairs(multiply_pairs(P[i].inverse(), P[j]), P[i]) == P[j + n - 1]
    assert len(set(P)) == len(P)


def test_presentation_generator_zero_is_classical():
    f0 = presentation_generator(0, 2)
    assert {f0.domain_subdivision.cut_points, f0.range_subdivision.cut_points} == {
        (F(1, 4), F(1, 2)),
        (F(1, 2), F(3, 4)),
    }
    assert pair_to_map(f0) in (X0_INV, X0_INV.inverse())


def test_fprime_necessary():
    assert fprime_necessary(CompactPL.identity(), 2)
    assert not fprime_necessary(X0_INV, 2)
    assert fprime_necessary(push_map(F(1, 4), F(3, 4), F(1, 2), F(5, 8), 2), 2)


@pytest.mark.parametrize("n", [2, 3])
def test_breakpoint_residues(n):
    rep = suite_breakpoints_mod(n=n, depth=3)
    assert rep.cases > 100 and rep.failures == 0


def test_is_cone():
    assert is_cone(F(3, 4), 1, 2) and is_cone(0, 1, 3)
    assert not is_cone(F(1, 4), F(3, 4), 2)
