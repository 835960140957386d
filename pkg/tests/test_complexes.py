import math
import random

import pytest
import sympy
from hypothesis import given, strategies as st

from natops.complexes import decomposition as DEC
from natops.complexes.chain import Bicomplex, ChainComplex, Homology, kunneth, smith_homology, tensor, totalize
from natops.complexes.cosimplicial import (build_D, build_Dhat, check_cosimplicial_identities, constant,
                                           free_crossed, iota_matrix, miraculous, miraculous_matrix, nerve,
                                           nerve_complex, random_cosimplicial, stable_window)
from natops.interval import FreeCrossedElement
from natops.linalg import SparseMatrix, dense_smith
from natops.perm import Perm


def test_smith_examples():
    assert smith_homology(ChainComplex({0: ["a"]}), 0) == (1, [])
    c = ChainComplex({0: ["a"], 1: ["b"]}, {0: SparseMatrix.from_dense([[2]])})
    assert smith_homology(c, 1) == (0, [2])
    assert smith_homology(c, 0) == (0, [])


def test_bad_shape_rejected():
    with pytest.raises(ValueError):
        ChainComplex({0: ["a"], 1: ["b", "c"]}, {0: SparseMatrix.from_dense([[1]])})


@given(st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3), min_size=3, max_size=3))
def test_smith_determinant(rows):
    factors = dense_smith(rows)
    det = abs(int(sympy.Matrix(rows).det()))
    if len(factors) == 3:
        assert math.prod(factors) == det
    else:
        assert det == 0
    for a, b in zip(factors, factors[1:]):
        assert b % a == 0


def test_nerve_of_D1():
    c = nerve_complex(build_D(1, 5))
    assert c.homology(0) == Homology(1)
    assert all(c.homology(i).is_zero() for i in range(1, 5))


def test_bez_values():
    c = build_D(3, 4)
    assert c.coface((1, 1), 1, 0) == {(0, 1, 1): 1, (1, 1, 1): 1}
    assert c.coface((1, 1), 1, 1) == {(1, 1, 1): 1}
    assert c.coface((1, 1), 1, 2) == {(1, 1, 1): 1, (1, 1, 2): 1, (1, 1, 3): 1}
    assert len(c.basis[(0, 0)]) == 4


def test_constant_nerve_telescopes():
    c = nerve_complex(constant(5))
    for m in range(5):
        assert c.d(m).to_dense() == [[1 if m % 2 else 0]] or c.d(m).to_dense() == [[-1 if m % 2 else 0]]


@pytest.mark.parametrize("q", range(4))
def test_nerve_d_squared(q):
    assert nerve_complex(build_D(q, 5)).check_d_squared()
    assert nerve(free_crossed(build_D(q, 4))).check()


@pytest.mark.parametrize("q", range(5))
def test_dhat_acyclic(q):
    c = nerve_complex(build_Dhat(q, 5))
    assert all(c.homology(i).is_zero() for i in range(-1, 5))


def test_totalize_single_bidegree():
    b = Bicomplex({(0, 0): ["x", "y"]}, {}, {})
    t = totalize(b)
    assert t.basis == {0: [((0, 0), "x"), ((0, 0), "y")]}
    assert t.homology(0) == Homology(2)


def test_totalize_of_row_is_the_row():
    c = build_D(1, 4)
    t = totalize(nerve(c), (0, 3))
    row = nerve_complex(c)
    for m in range(0, 4):
        assert t.homology(m) == row.homology(m)


def test_free_crossed_dimensions():
    for q in range(3):
        c, fc = build_D(q, 4), free_crossed(build_D(q, 4))
        for n in range(5):
            assert len(fc.basis[(n, 0)]) == len(c.basis[(n, 0)]) * math.factorial(n)


def test_miraculous_examples():
    assert miraculous({FreeCrossedElement("a", Perm.identity(2)): 1}) == {"a": 1}
    assert miraculous({FreeCrossedElement("a", Perm.of(2, 1)): 1}) == {"a": -1}


@pytest.mark.parametrize("q", range(4))
def test_miraculous_chain_map_and_retraction(q):
    c = build_D(q, 4)
    fc = free_crossed(c)
    bc, bf = nerve(c), nerve(fc)
    for n in range(4):
        assert miraculous_matrix(fc, c, n + 1, 0) @ bf.d[(n, 0)] == bc.d[(n, 0)] @ miraculous_matrix(fc, c, n, 0)
    for n in range(5):
        prod = miraculous_matrix(fc, c, n, 0) @ iota_matrix(c, fc, n, 0)
        dim = len(c.basis[(n, 0)])
        assert prod.to_dense() == [[int(i == j) for j in range(dim)] for i in range(dim)]


def test_l1_identity_key():
    assert DEC.l1_key((0, 1, 1), Perm.identity(2)) == DEC.IDENTITY_KEY


@pytest.mark.parametrize("q", range(4))
def test_l1_ranks(q):
    for n in range(7):
        ranks = DEC.l1_decompose(q, n)
        assert sum(ranks.values()) == math.comb(q + n + 1, n + 1) * math.factorial(n)
        assert sum(ranks.values()) == DEC.rhs_dimension(q, n)
        assert ranks == DEC.summand_ranks_predicted(q, n)


@pytest.mark.parametrize("q", range(3))
def test_summand_invariance(q):
    assert DEC.check_summand_invariance(q, 4)


@pytest.mark.parametrize("q", range(4))
def test_models_acyclic_two_ways(q):
    direct = DEC.homology_direct(q, 6)
    assert direct == DEC.homology_via_l1(q, 6)
    assert direct[0] == Homology(1)
    assert all(h.is_zero() for i, h in direct.items() if i >= 1)


def test_kunneth_tor():
    z2 = {0: Homology(0, (2,))}
    assert kunneth(z2, z2)[0] == Homology(0, (2,))
    assert kunneth(z2, z2)[-1] == Homology(0, (2,))
    z = {0: Homology(1)}
    assert kunneth(z, z2) == {0: Homology(0, (2,)), -1: Homology(0)}


@given(st.integers(0, 2 ** 32))
def test_random_models_are_cosimplicial(seed):
    c = random_cosimplicial(random.Random(seed), 4)
    assert check_cosimplicial_identities(c) == []
    assert check_cosimplicial_identities(free_crossed(c)) == []


@pytest.mark.parametrize("seed", range(5))
def test_free_crossed_preserves_total_homology(seed):
    c = random_cosimplicial(random.Random(seed), 5)
    lo, hi = stable_window(c)
    lo = max(lo, 0)
    a, b = totalize(nerve(c), (lo, hi)), totalize(nerve(free_crossed(c)), (lo, hi))
    assert all(a.homology(m) == b.homology(m) for m in range(lo, hi + 1))


def test_chain_complex_json_round_trip():
    c = nerve_complex(build_D(2, 3))
    j = c.to_json()
    assert ChainComplex.from_json(j).to_json() == j


def _two_term(lo, entries, tag):
    """A free complex with one differential, given as a dense matrix."""
    rows, cols = len(entries), len(entries[0])
    basis = {lo: [(tag, lo, i) for i in range(cols)], lo + 1: [(tag, lo + 1, i) for i in range(rows)]}
    return ChainComplex(basis, {lo: SparseMatrix.from_dense(entries)})


@given(st.integers(-1, 1), st.integers(-1, 1),
       st.lists(st.lists(st.integers(-4, 4), min_size=2, max_size=2), min_size=2, max_size=2),
       st.lists(st.lists(st.integers(-4, 4), min_size=2, max_size=2), min_size=1, max_size=2))
def test_kunneth_matches_tensor(la, lb, ma, mb):
    a, b = _two_term(la, ma, "a"), _two_term(lb, mb, "b")
    t = tensor(a, b)
    assert t.check_d_squared()
    ha = {m: a.homology(m) for m in a.degrees()}
    hb = {m: b.homology(m) for m in b.degrees()}
    predicted = kunneth(ha, hb)
    for m in t.degrees():
        assert t.homology(m) == predicted.get(m, Homology(0))
