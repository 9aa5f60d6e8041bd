from fractions import Fraction as Q

import pytest
import sympy

from weightzero.root_data import (
    LieType,
    cartan_matrix,
    dual_permutation,
    e_of_G,
    gram_fundamental,
    half_root_length,
    half_root_lengths,
    inverse_cartan,
    long_nodes,
    miniscule_weights,
    set_max_rank,
    short_nodes,
    supported_types,
)

ALL = supported_types(8)


def T(s):
    return LieType.parse(s)


@pytest.mark.parametrize("fam,rank", [("A", 0), ("B", 1), ("C", 1), ("D", 2), ("E", 5),
                                      ("E", 9), ("F", 3), ("G", 3), ("H", 2)])
def test_invalid_types(fam, rank):
    with pytest.raises(ValueError):
        LieType(fam, rank)


def test_parse_forms():
    assert T("C:3") == LieType("C", 3) == T("c3")
    assert str(T("E:6")) == "E6"
    with pytest.raises(ValueError):
        T("C:x")


def test_rank_cap(monkeypatch):
    monkeypatch.setenv("WZK_MAX_RANK", "5")
    with pytest.raises(ValueError):
        LieType("A", 6)
    set_max_rank(70)
    try:
        LieType("A", 70)
    finally:
        set_max_rank(None)
    monkeypatch.delenv("WZK_MAX_RANK")
    with pytest.raises(ValueError):
        LieType("A", 65)


def test_cartan_small():
    assert cartan_matrix(T("A:1")) == ((2,),)
    assert cartan_matrix(T("A:2")) == ((2, -1), (-1, 2))
    assert cartan_matrix(T("G:2")) == ((2, -1), (-3, 2))
    assert cartan_matrix(T("C:2")) == ((2, -1), (-2, 2))
    assert cartan_matrix(T("B:2")) == ((2, -2), (-1, 2))


def test_g2_inverse_matches_bourbaki():
    # w1 = 2a1 + a2, w2 = 3a1 + 2a2
    assert inverse_cartan(T("G:2")) == ((2, 1), (3, 2))


def test_f4_and_e8_rows():
    assert inverse_cartan(T("F:4"))[0] == (2, 3, 4, 2)
    assert inverse_cartan(T("F:4"))[3] == (1, 2, 3, 2)
    assert inverse_cartan(T("E:8"))[7] == (2, 3, 4, 6, 5, 4, 3, 2)
    assert inverse_cartan(T("E:6"))[0] == tuple(Q(x, 3) for x in (4, 3, 5, 6, 4, 2))


@pytest.mark.parametrize("t", ALL, ids=str)
def test_inverse_is_inverse(t):
    c = cartan_matrix(t)
    d = inverse_cartan(t)
    n = t.rank
    for i in range(n):
        for j in range(n):
            assert sum(d[i][k] * c[k][j] for k in range(n)) == (i == j)


@pytest.mark.parametrize("t", ALL, ids=str)
def test_inverse_against_sympy(t):
    ref = sympy.Matrix(cartan_matrix(t)).inv()
    d = inverse_cartan(t)
    for i in range(t.rank):
        for j in range(t.rank):
            r = ref[i, j]
            assert d[i][j] == Q(int(r.p), int(r.q))


@pytest.mark.parametrize("t", ALL, ids=str)
def test_positivity_and_symmetry(t):
    d = inverse_cartan(t)
    e = gram_fundamental(t)
    h = half_root_lengths(t)
    c = cartan_matrix(t)
    n = t.rank
    for i in range(n):
        for j in range(n):
            assert d[i][j] > 0
            assert e[i][j] == e[j][i]
            assert e[i][j] == half_root_length(t, j + 1) * d[i][j]
            # (a_i, a_j) = C_ij * h_j is symmetric
            assert c[i][j] * h[j] == c[j][i] * h[i]


@pytest.mark.parametrize("t", ALL, ids=str)
def test_gram_positive_definite(t):
    m = sympy.Matrix(gram_fundamental(t))
    for k in range(1, t.rank + 1):
        assert m[:k, :k].det() > 0


def test_type_a_gram_formula():
    for n in range(1, 9):
        e = gram_fundamental(LieType("A", n))
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                assert e[i - 1][j - 1] == Q(i * (n + 1 - j), n + 1)


def test_a2_inverse():
    d = inverse_cartan(T("A:2"))
    assert d[0][0] == Q(2, 3) and d[0][1] == Q(1, 3)


def test_c_n_last_norm():
    for n in range(2, 9):
        assert gram_fundamental(LieType("C", n))[n - 1][n - 1] == n


@pytest.mark.parametrize("t,k,h", [("A:5", 3, 1), ("C:4", 4, 2), ("G:2", 2, 3), ("B:3", 3, Q(1, 2)),
                                   ("F:4", 3, Q(1, 2)), ("F:4", 2, 1), ("G:2", 1, 1)])
def test_half_root_length(t, k, h):
    assert half_root_length(T(t), k) == h


def test_half_root_length_range():
    with pytest.raises(IndexError):
        half_root_length(T("A:2"), 3)


def test_miniscule():
    assert miniscule_weights(T("A:3")) == (1, 2, 3)
    assert miniscule_weights(T("E:8")) == ()
    assert miniscule_weights(T("B:5")) == (5,)
    assert miniscule_weights(T("D:5")) == (1, 4, 5)
    assert miniscule_weights(T("E:6")) == (1, 6)
    assert miniscule_weights(T("E:7")) == (7,)


@pytest.mark.parametrize("t", ALL, ids=str)
def test_e_of_G_is_length_ratio(t):
    h = half_root_lengths(t)
    assert e_of_G(t) == max(h) / min(h)
    assert set(short_nodes(t)) | set(long_nodes(t)) == set(t.nodes())


def test_e_values():
    assert e_of_G(T("A:4")) == 1
    assert e_of_G(T("D:5")) == 1
    assert e_of_G(T("C:3")) == 2
    assert e_of_G(T("G:2")) == 3


def test_dual_permutation():
    assert dual_permutation(T("A:3")) == (3, 2, 1)
    assert dual_permutation(T("E:6")) == (6, 2, 5, 4, 3, 1)
    assert dual_permutation(T("D:5")) == (1, 2, 3, 5, 4)
    assert dual_permutation(T("D:4")) == (1, 2, 3, 4)
    assert dual_permutation(T("B:4")) == (1, 2, 3, 4)


@pytest.mark.parametrize("t", ALL, ids=str)
def test_dual_permutation_involution_and_diagram_automorphism(t):
    pi = dual_permutation(t)
    assert all(pi[pi[k] - 1] == k + 1 for k in range(t.rank))
    c = cartan_matrix(t)
    n = t.rank
    assert all(c[pi[i] - 1][pi[j] - 1] == c[i][j] for i in range(n) for j in range(n))


def test_d3_is_a3_relabelled():
    # D_3 node 1 is the middle node of A_3
    d3 = cartan_matrix(T("D:3"))
    a3 = cartan_matrix(T("A:3"))
    perm = (1, 0, 2)
    assert all(d3[i][j] == a3[perm[i]][perm[j]] for i in range(3) for j in range(3))
