import itertools
import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weightzero.root_data import (
    LieType,
    cartan_matrix,
    half_root_length,
    supported_types,
)
from weightzero.weights import (
    RootCoords,
    TypeMismatch,
    Weight,
    dominance_geq,
    dominates_multiple_fundamental,
    dual,
    fundamental,
    inner,
    is_dominant,
    is_p_restricted,
    is_radical,
    is_radical_by_table,
    p_adic_expansion,
    scale,
    to_root_coords,
    zero,
)

SMALL = supported_types(5)
BIG = [t for t in supported_types(8) if t.rank >= 6]


def T(s):
    return LieType.parse(s)


def W(t, *c):
    return Weight(T(t), c)


@st.composite
def weights(draw, types=tuple(supported_types(6)), lo=-3, hi=6):
    t = draw(st.sampled_from(types))
    return Weight(t, tuple(draw(st.integers(lo, hi)) for _ in range(t.rank)))


@st.composite
def weight_pairs(draw, lo=-3, hi=6):
    u = draw(weights(lo=lo, hi=hi))
    v = Weight(u.t, tuple(draw(st.integers(lo, hi)) for _ in range(u.t.rank)))
    return u, v


def test_parse_and_format():
    w = Weight.parse("C:3 1,0,2")
    assert w == W("C:3", 1, 0, 2)
    assert str(w) == "C:3 1,0,2"
    assert w.pretty() == "w1+2w3"
    with pytest.raises(ValueError):
        Weight.parse("C:3 1,0")
    with pytest.raises(ValueError):
        Weight.parse("C:3 1,a,0")


def test_type_mismatch():
    with pytest.raises(TypeMismatch):
        W("B:3", 1, 0, 0) + W("C:3", 1, 0, 0)
    with pytest.raises(TypeMismatch):
        inner(W("B:2", 1, 0), W("C:2", 1, 0))


def test_root_coords_examples():
    assert to_root_coords(W("A:1", 1)).coords == (Q(1, 2),)
    assert to_root_coords(W("C:2", 0, 1)).coords == (1, 1)
    assert to_root_coords(zero(T("E:7"))).coords == (0,) * 7


@given(weights())
def test_root_coords_round_trip(w):
    assert to_root_coords(w).to_weight() == w


@given(weights())
def test_inner_with_fundamental_via_root_coords(w):
    c = to_root_coords(w).coords
    for k in w.t.nodes():
        assert inner(w, fundamental(w.t, k)) == half_root_length(w.t, k) * c[k - 1]


def test_root_coords_non_integral():
    with pytest.raises(ValueError):
        RootCoords(T("A:1"), (Q(1, 3),)).to_weight()


def test_radical_examples():
    assert is_radical(W("A:2", 1, 1))
    assert not is_radical(W("B:3", 0, 0, 1))
    assert all(is_radical(Weight(T("G:2"), c)) for c in itertools.product(range(-3, 4), repeat=2))
    assert not is_radical_by_table(W("E:7", 0, 1, 0, 0, 0, 0, 0))
    assert not is_radical_by_table(W("D:4", 1, 0, 0, 0))
    assert is_radical_by_table(zero(T("D:5")))


@pytest.mark.parametrize("t", SMALL, ids=str)
def test_radical_table_exhaustive(t):
    for c in itertools.product(range(-2, 6), repeat=t.rank):
        w = Weight(t, c)
        assert is_radical(w) == is_radical_by_table(w), w


@pytest.mark.parametrize("t", BIG, ids=str)
def test_radical_table_random(t):
    rng = random.Random(f"radical-{t}")
    for _ in range(10_000):
        w = Weight(t, tuple(rng.randint(-4, 7) for _ in range(t.rank)))
        assert is_radical(w) == is_radical_by_table(w), w


def test_inner_examples():
    assert inner(W("C:3", 0, 0, 1), W("C:3", 0, 0, 1)) == 3
    assert inner(W("A:2", 1, 0), W("A:2", 0, 1)) == Q(1, 3)
    assert inner(zero(T("F:4")), W("F:4", 1, 2, 3, 4)) == 0


@given(weight_pairs())
def test_inner_symmetric(pair):
    u, v = pair
    assert inner(u, v) == inner(v, u)


def test_dominance_examples():
    a1 = fundamental(T("A:1"), 1)
    assert dominance_geq(3 * a1, a1)
    assert not dominance_geq(2 * a1, a1)
    for n in range(2, 7):
        t = LieType("B", n)
        w1 = fundamental(t, 1)
        for j in range(1, n):
            assert dominance_geq(fundamental(t, j), w1)
        assert dominance_geq(2 * fundamental(t, n), w1)


@given(weights())
def test_dominance_reflexive(w):
    assert dominance_geq(w, w)


@given(weight_pairs())
def test_dominance_antisymmetric(pair):
    u, v = pair
    if dominance_geq(u, v) and dominance_geq(v, u):
        assert u == v


@settings(max_examples=300)
@given(st.data())
def test_dominance_transitive(data):
    t = data.draw(st.sampled_from(supported_types(4)))
    u = Weight(t, tuple(data.draw(st.integers(0, 5)) for _ in range(t.rank)))
    # walk down by simple roots to build a chain u >= v >= w
    cart = cartan_matrix(t)

    def lower(x):
        steps = data.draw(st.lists(st.integers(0, t.rank - 1), max_size=4))
        for k in steps:
            x = Weight(t, tuple(a - r for a, r in zip(x.coeffs, cart[k])))
        return x

    v = lower(u)
    w = lower(v)
    assert dominance_geq(u, v) and dominance_geq(v, w)
    assert dominance_geq(u, w)


@given(weight_pairs())
def test_dominance_by_fundamental_inner_products(pair):
    u, v = pair
    diff = u - v
    via_inner = is_radical(diff) and all(
        inner(u, fundamental(u.t, k)) >= inner(v, fundamental(u.t, k)) for k in u.t.nodes())
    assert dominance_geq(u, v) == via_inner


@pytest.mark.parametrize("t", supported_types(4), ids=str)
def test_single_inequality_propagates_for_dominant(t):
    fund = [fundamental(t, k) for k in t.nodes()]
    for c in itertools.product(range(4), repeat=t.rank):
        w = Weight(t, c)
        for k, wk in enumerate(fund, 1):
            for m in range(0, 5):
                if inner(w, wk) >= m * inner(wk, wk):
                    for wi in fund:
                        assert inner(w, wi) >= m * inner(wk, wi)


def test_dominates_multiple_examples():
    t = T("C:3")
    assert dominates_multiple_fundamental(W("C:3", 1, 1, 1), 2, 1)
    for j in t.nodes():
        for m in (1, 2, 3):
            assert dominates_multiple_fundamental(m * fundamental(t, j), m, j)
    with pytest.raises(ValueError):
        dominates_multiple_fundamental(W("C:3", 1, 1, 1), 0, 1)


def test_dominates_multiple_needs_dominance():
    # the single-inequality shortcut is only valid for dominant weights
    w = W("A:2", -2, 2)
    assert dominates_multiple_fundamental(w, 1, 2)
    assert not dominance_geq(w, fundamental(w.t, 2))


@pytest.mark.parametrize("t", supported_types(4), ids=str)
def test_dominates_multiple_matches_dominance(t):
    for c in itertools.product(range(4), repeat=t.rank):
        w = Weight(t, c)
        for j in t.nodes():
            for m in range(1, 5):
                assert dominates_multiple_fundamental(w, m, j) == dominance_geq(
                    w, m * fundamental(t, j))


def test_dual_examples():
    assert dual(W("A:3", 1, 0, 2)) == W("A:3", 2, 0, 1)
    assert dual(W("B:4", 1, 2, 3, 4)) == W("B:4", 1, 2, 3, 4)
    assert dual(W("E:6", 1, 0, 0, 0, 0, 0)) == W("E:6", 0, 0, 0, 0, 0, 1)
    assert dual(W("D:5", 1, 2, 3, 4, 5)) == W("D:5", 1, 2, 3, 5, 4)


@given(weights())
def test_dual_involution_and_isometry(w):
    assert dual(dual(w)) == w
    assert inner(dual(w), dual(w)) == inner(w, w)
    assert is_radical(dual(w)) == is_radical(w)


def test_p_adic_examples():
    a1 = fundamental(T("A:1"), 1)
    assert p_adic_expansion(7 * a1, 2) == [a1, a1, a1]
    assert p_adic_expansion(W("C:2", 1, 4), 2) == [W("C:2", 1, 0), W("C:2", 0, 0), W("C:2", 0, 1)]
    assert p_adic_expansion(W("G:2", 1, 1), 2) == [W("G:2", 1, 1)]
    assert p_adic_expansion(zero(T("A:3")), 5) == []
    with pytest.raises(ValueError):
        p_adic_expansion(W("A:2", -1, 0), 3)


@given(weights(lo=0, hi=40), st.sampled_from([2, 3, 5, 7]))
def test_p_adic_reconstructs(w, p):
    digits = p_adic_expansion(w, p)
    total = zero(w.t)
    for s, d in enumerate(digits):
        assert is_p_restricted(d, p) and is_dominant(d)
        total = total + p ** s * d
    assert total == w
    if digits:
        assert not digits[-1].is_zero()


def test_predicates():
    assert is_p_restricted(W("A:2", 1, 1), 2)
    assert not is_p_restricted(W("A:2", 2, 0), 2)
    assert scale(fundamental(T("A:3"), 1), 3) == W("A:3", 3, 0, 0)
    assert is_dominant(zero(T("E:8")))
    assert not is_dominant(W("A:2", 0, -1))
