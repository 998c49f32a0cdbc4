from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from plgroups.errors import DomainError, InvalidMap, ParseError, SideUndefined
from plgroups.gammaq import xi_build
from plgroups.plmap import (
    CompactPL,
    PeriodicPL,
    agree_on,
    commutator,
    compose,
    dumps,
    equals,
    evaluate,
    invert,
    loads,
    loads_all,
    one_sided_slope,
    support,
)

F = Fraction


@pytest.fixture(scope="module")
def xi():
    return xi_build(2, 2).map


def random_compact(rng: random.Random, pieces: int = 4) -> CompactPL:
    xs = sorted({F(rng.randint(1, 99), 100) for _ in range(pieces)})
    ys = sorted({F(rng.randint(1, 99), 100) for _ in range(len(xs))})
    xs = xs[: len(ys)]
    return CompactPL([(0, 0), *zip(xs, ys), (1, 1)])


def random_periodic(rng: random.Random) -> PeriodicPL:
    c = F(rng.randint(-30, 30), 17)
    xs = sorted({F(rng.randint(1, 99), 100) for _ in range(3)})
    ys = sorted({F(rng.randint(1, 99), 100) for _ in range(len(xs))})
    xs = xs[: len(ys)]
    return PeriodicPL([(0, c), *((x, y + c) for x, y in zip(xs, ys)), (1, 1 + c)])


compact_maps = st.integers(0, 10**9).map(lambda s: random_compact(random.Random(s)))
periodic_maps = st.integers(0, 10**9).map(lambda s: random_periodic(random.Random(s)))


def test_xi_values(xi):
    # three pieces on [-1/6, 1/3]: slopes 6, 2 and 1/6 meeting at -5/36 and 0
    assert evaluate(xi, 0) == F(5, 18)
    assert evaluate(xi, 1) == 1 + F(5, 18)
    assert evaluate(xi, F(-5, 36)) == 0
    assert evaluate(invert(xi), F(5, 18)) == 0
    assert evaluate(compose(xi, xi), 0) == evaluate(xi, F(5, 18))
    assert one_sided_slope(xi, 0, "left") == 2
    assert one_sided_slope(xi, 0, "right") == F(1, 6)
    assert one_sided_slope(xi, F(-1, 6), "right") == 6


def test_identity_behaviour():
    ident = CompactPL.identity()
    assert evaluate(ident, F(7, 13)) == F(7, 13)
    assert one_sided_slope(ident, F(1, 3), "left") == 1
    assert support(ident).is_empty()
    assert support(PeriodicPL.identity()).is_empty()
    assert invert(ident) == ident


def test_domain_errors():
    f = CompactPL.identity()
    with pytest.raises(DomainError):
        evaluate(f, F(3, 2))
    with pytest.raises(SideUndefined):
        one_sided_slope(f, 0, "left")
    with pytest.raises(SideUndefined):
        one_sided_slope(f, 1, "right")
    with pytest.raises(InvalidMap):
        CompactPL([(0, 0), (F(1, 2), F(1, 2)), (F(1, 2), F(3, 4)), (1, 1)])
    with pytest.raises(TypeError):
        compose(CompactPL.identity(), PeriodicPL.identity())


def test_support_examples(xi):
    assert support(xi).intervals == ((F(-1, 6), F(1, 3)),)
    bump = CompactPL([(0, 0), (F(1, 2), F(1, 2)), (F(3, 4), F(5, 8)), (1, 1)])
    assert support(bump).intervals == ((F(1, 2), 1),)


def test_agree_on_examples(xi):
    ident = PeriodicPL.identity()
    assert agree_on(ident, xi, (F(2, 5), F(1, 2)))
    assert not agree_on(ident, xi, (0, F(1, 4)))
    assert agree_on(xi, xi, (F(-3), F(7, 2)))
    assert not equals(xi, invert(xi))


@given(compact_maps, compact_maps, compact_maps)
def test_compact_group_axioms(f, g, h):
    ident = CompactPL.identity()
    assert compose(compose(f, g), h) == compose(f, compose(g, h))
    assert compose(f, invert(f)) == ident == compose(invert(f), f)


@given(compact_maps, st.fractions(0, 1))
def test_chain_rule(f, x):
    g = invert(f)
    if x == 1:
        return
    assert compose(f, g).one_sided_slope(x, "right") == f.one_sided_slope(x, "right") * g.one_sided_slope(
        f(x), "right"
    )


@settings(max_examples=60)
@given(periodic_maps, periodic_maps, periodic_maps, st.fractions(-5, 5))
def test_periodic_group_axioms(f, g, h, x):
    assert compose(compose(f, g), h) == compose(f, compose(g, h))
    assert compose(f, invert(f)).is_identity()
    assert f.evaluate(x + 1) == f.evaluate(x) + 1
    assert compose(f, g).evaluate(x) == g.evaluate(f.evaluate(x))


@given(periodic_maps, st.fractions(-3, 3), st.fractions(0, 1).filter(lambda t: t < 1))
def test_short_intervals_stay_short(f, a, length):
    assert f.evaluate(a + length) - f.evaluate(a) < 1


@given(compact_maps)
def test_canonical_form_idempotent(f):
    (x0, y0), (x1, y1) = f.points[:2]
    padded = CompactPL([(x0, y0), ((x0 + x1) / 2, (y0 + y1) / 2), *f.points[1:]])
    assert padded == f
    assert CompactPL(f.points) == f


@given(compact_maps, compact_maps, st.lists(st.fractions(0, 1), max_size=20))
def test_support_of_product(f, g, xs):
    fg = compose(f, g)
    sf, sg = support(f), support(g)
    for x in xs + list(f.xs) + list(g.xs):
        if x not in sf and x not in sg:
            assert fg(x) == x
        if x in support(fg):
            assert x in sf or x in sg


@given(st.one_of(compact_maps, periodic_maps))
def test_serialization_round_trip(f):
    text = dumps(f, 2)
    g, n = loads(text)
    assert g == f and n == 2 and dumps(g, 2) == text


def test_serialization_multi_block_and_errors(xi):
    text = "# two maps\n" + dumps(xi, 2) + dumps(CompactPL.identity(), 3)
    blocks = loads_all(text)
    assert [n for _, n in blocks] == [2, 3]
    with pytest.raises(ParseError):
        loads(text)
    with pytest.raises(ParseError):
        loads("plmap kind=weird n=2\n0 0\n1 1\n")


def test_commutator_of_disjoint_supports_is_trivial():
    a = CompactPL([(0, 0), (F(1, 8), F(1, 16)), (F(1, 4), F(1, 4)), (1, 1)])
    b = CompactPL([(0, 0), (F(1, 2), F(1, 2)), (F(5, 8), F(11, 16)), (F(3, 4), F(3, 4)), (1, 1)])
    assert commutator(a, b).is_identity()
