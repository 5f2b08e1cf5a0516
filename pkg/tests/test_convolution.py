from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from amenalab import finite
from amenalab.convolution import (BOUNDED, UNBOUNDED_TREND, WINDOW_LIMITED, FinFunc, act, ast_invariance_check,
                                  bounded_indicator_verdict, convolve, indicator_sweep, partial_action)
from amenalab.families import Bicyclic, FreeSemigroup
from amenalab.measures import WeightVector, fair_check_finite
from amenalab.registry import resolve
from amenalab.semigroup import LiteralError
from amenalab.sets import AllOfS, FiniteList

B = Bicyclic()
F = Fraction


def test_delta_products():
    Fr = FreeSemigroup(2)
    assert convolve(Fr, FinFunc.delta(Fr, "ab"), FinFunc.delta(Fr, "ba")) == FinFunc.delta(Fr, "abba")
    lhs = convolve(B, FinFunc.delta(B, B.P) + FinFunc.delta(B, B.Q), FinFunc.delta(B, B.P))
    assert lhs == FinFunc.delta(B, (0, 2)) + FinFunc.delta(B, (1, 1))


def test_left_zero_coefficients_add():
    L = finite.left_zero(2)
    got = convolve(L, FinFunc.delta(L, 0), FinFunc.indicator(L, [0, 1]))
    assert got == FinFunc.delta(L, 0, 2)


def _rand_func(S, rng, pool, size=4):
    return FinFunc.from_dict(S, {rng.choice(pool): F(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(size)})


def test_algebra_laws():
    rng = random.Random(3)
    for S in (B, resolve("polycyclic"), resolve("munn"), finite.brandt2()):
        pool = list(S.window(2))
        for _ in range(25):
            f, g, h = (_rand_func(S, rng, pool) for _ in range(3))
            c = F(rng.randint(-3, 3), 2)
            assert convolve(S, convolve(S, f, g), h) == convolve(S, f, convolve(S, g, h))
            assert convolve(S, f + g, h) == convolve(S, f, h) + convolve(S, g, h)
            assert convolve(S, f, g + h) == convolve(S, f, g) + convolve(S, f, h)
            assert convolve(S, f.scale(c), g) == convolve(S, f, g).scale(c)
            products = {S.mul(a, b) for a in f.support for b in g.support}
            assert set(convolve(S, f, g).support) <= products
            s = rng.choice(pool)
            assert act(S, s, f) == convolve(S, FinFunc.delta(S, s), f)
            assert act(S, s, f, "right") == convolve(S, f, FinFunc.delta(S, s))
            assert act(S, s, f + g) == act(S, s, f) + act(S, s, g)


@settings(max_examples=100, deadline=None)
@given(st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)),
                       st.fractions(min_value=0, max_value=5), max_size=10),
       st.tuples(st.integers(0, 3), st.integers(0, 3)))
def test_support_of_nonnegative_translate(values, s):
    f = FinFunc.from_dict(B, values)
    r = partial_action(B, s, f)
    assert set(r.values.support) == {B.mul(s, t) for t in f.support} == set(r.image_of_support)


def test_signed_values_can_cancel():
    f = FinFunc.from_dict(B, {(0, 0): 1, (1, 1): -1})
    r = partial_action(B, B.P, f)
    assert r.values == FinFunc.from_dict(B, {})
    assert r.image_of_support.format() == ["p"]
    assert r.max_fiber == 2


def test_injective_partial_action_relabels():
    Fr = FreeSemigroup(2)
    f = FinFunc.from_dict(Fr, {"a": 1, "ab": F(1, 2), "bb": 3})
    r = partial_action(Fr, "b", f)
    assert r.verdict == BOUNDED and r.max_fiber == 1
    assert r.values == FinFunc.from_dict(Fr, {"ba": 1, "bab": F(1, 2), "bbb": 3})


def test_zero_on_window_indicator_grows():
    Z = resolve("munn^0")
    results = indicator_sweep(Z, Z.zero, AllOfS(), [1, 2, 3, 4])
    assert [r.values(Z.zero) for r in results] == [len(Z.window(n)) for n in (1, 2, 3, 4)]
    assert {r.verdict for r in results} == {UNBOUNDED_TREND}
    assert all(len(r.values.support) == 1 for r in results)


def test_geometric_series_at_zero():
    N0 = resolve("freecomm:1^0")
    for n in (4, 8, 12):
        window = [x for x in N0.window(n) if x != N0.zero]
        f = FinFunc.from_callable(N0, window, lambda x: F(1, 2 ** x[0]))
        r = partial_action(N0, N0.zero, f, window=n)
        assert r.values.as_dict() == {N0.zero: 1 - F(1, 2 ** (n - 1))}
        assert r.verdict == WINDOW_LIMITED
    assert r.values(N0.zero) == F(2047, 2048)


def test_finite_set_sweep_is_bounded():
    results = indicator_sweep(B, B.P, FiniteList(((0, 0), (1, 1))), [2, 3, 4])
    assert {r.verdict for r in results} == {BOUNDED}


def test_bounded_indicator_verdicts():
    v = bounded_indicator_verdict(B, B.P, B.window(5))
    assert v.max_fiber == 2 == len(v.parts) == v.peak_value and v.consistent
    Fr = FreeSemigroup(2)
    A = Fr.window(3)
    v = bounded_indicator_verdict(Fr, "a", A)
    assert v.max_fiber == 1 and [set(p) for p in v.parts] == [set(A)] and v.consistent
    Z = resolve("cyclic:3^0")
    v = bounded_indicator_verdict(Z, Z.zero, Z.elements())
    assert v.max_fiber == 4 and v.consistent


def test_ast_examples():
    G = finite.symmetric_group3()
    rng = random.Random(4)
    elems = list(G.elements())
    for _ in range(20):
        f = _rand_func(G, rng, elems)
        for s in elems:
            c = ast_invariance_check(G, WeightVector.uniform(G), f, s)
            assert c.equal and c.guaranteed
    R = resolve("left-zero:2*right-zero:3")
    w = WeightVector.uniform(R)
    elems = list(R.elements())
    for _ in range(100):
        f = _rand_func(R, rng, elems, size=6)
        for s in elems:
            for side in ("left", "right"):
                assert ast_invariance_check(R, w, f, s, side).equal
    L = finite.left_zero(2)
    w = WeightVector.from_dict(L, {0: F(3, 4), 1: F(1, 4)})
    c = ast_invariance_check(L, w, FinFunc.delta(L, 1), 0)
    assert (c.equal, c.acted, c.original, c.guaranteed) == (False, F(3, 4), F(1, 4), False)


@pytest.mark.parametrize("S", [S for S in finite.catalog() if S.order() <= 5], ids=lambda S: S.name)
def test_fair_iff_ast_invariant(S):
    rng = random.Random(11)
    elems = list(S.elements())
    for side in ("left", "right"):
        for _ in range(5):
            raw = {x: rng.randint(0, 3) for x in elems}
            raw[elems[0]] += 1
            total = sum(raw.values())
            w = WeightVector.from_dict(S, {x: F(m, total) for x, m in raw.items()})
            ast = all(ast_invariance_check(S, w, FinFunc.delta(S, a), s, side).equal
                      for s in elems for a in elems)
            assert fair_check_finite(S, w, side).passed == ast


def test_parse_functions():
    f = FinFunc.parse(B, "# f\nq 1/2\np -3\nq 1/2\n")
    assert f == FinFunc.from_dict(B, {B.Q: 1, B.P: -3})
    assert f.to_json() == {"p": "-3/1", "q": "1/1"}
    with pytest.raises(LiteralError):
        FinFunc.parse(B, "q")
