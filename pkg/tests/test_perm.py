import random

import pytest
from hypothesis import given, strategies as st

from natops import perm as P
from natops.perm import Perm


def perms(max_q=6):
    return st.integers(0, max_q).flatmap(lambda q: st.permutations(range(1, q + 1))).map(
        lambda xs: Perm(tuple(xs)))


def test_compose_examples():
    assert P.compose(Perm.of(2, 1), Perm.of(2, 1)) == Perm.of(1, 2)
    s = Perm.of(3, 1, 2)
    assert P.compose(Perm.identity(3), s) == s
    assert P.compose(Perm.of(2, 3, 1), Perm.of(3, 1, 2)) == Perm.identity(3)


def test_compose_arity_mismatch():
    with pytest.raises(ValueError):
        P.compose(Perm.of(1, 2), Perm.of(1))


def test_sign_examples():
    assert P.sign(Perm.identity(4)) == 1
    assert P.sign(Perm.of(2, 1)) == -1
    assert P.sign(Perm.of(3, 2, 1)) == -1


def test_grade_examples():
    for n in range(1, 6):
        assert P.grade(Perm.identity(n)).g == n - 1
    g = P.grade(Perm.of(2, 1))
    assert (g.a, g.b, g.c, g.g) == (0, 0, 0, 0)
    g = P.grade(Perm.of(1, 3, 4, 2))
    assert (g.a, g.b, g.c, g.g) == (1, 1, 0, 2)
    assert g.omega == Perm.of(2, 3, 1)


def test_contract_examples():
    assert P.contract(Perm.identity(5)) == Perm.of(1)
    assert P.contract(Perm.of(2, 1)) == Perm.of(2, 1)
    assert P.contract(Perm.of(1, 3, 4, 2)) == Perm.of(2, 1)


def test_coface_examples():
    assert P.coface(Perm.of(2, 1), 0) == Perm.of(1, 3, 2)
    assert P.coface(Perm.of(2, 1), 3) == Perm.of(2, 1, 3)
    assert P.coface(Perm.of(2, 1), 1) == Perm.of(2, 3, 1)
    with pytest.raises(ValueError):
        P.coface(Perm.of(2, 1), 4)


def test_bar_index_examples():
    h = Perm.of(2, 1)
    assert P.bar_index(h, 1) == 2
    assert P.bar_index(h, 0) == 0
    assert all(P.bar_index(Perm.identity(3), i) == i for i in range(5))
    with pytest.raises(ValueError):
        P.under_index(h, 2)


def test_simple_counts():
    assert len(P.simple_perms(2)) == 1
    assert len(P.simple_perms(3)) == 1


def test_sign_identity_exhaustive():
    for q in range(7):
        for s in P.all_perms(q):
            for i in range(q + 2):
                assert (-1) ** P.bar_index(s, i) * P.sign(s) == (-1) ** i * P.sign(P.coface(s, i))


def test_kappa_stable_under_inner_cofaces():
    for q in range(1, 7):
        for s in P.all_perms(q):
            for i in range(1, q + 2):
                assert P.contract(P.coface(s, i)) == P.contract(s)


def test_grade_matches_contraction():
    for q in range(1, 7):
        for s in P.all_perms(q):
            if not s.is_identity():
                assert P.grade(s).g == q - P.contract(s).q


@given(perms(7), st.integers(0, 2 ** 32))
def test_contraction_is_confluent(s, seed):
    rng = random.Random(seed)
    assert P.contract(s, choose=rng.choice) == P.contract(s)


@given(perms(), perms())
def test_sign_is_multiplicative(a, b):
    if a.q == b.q:
        assert P.sign(P.compose(a, b)) == P.sign(a) * P.sign(b)


@given(perms())
def test_codegeneracy_after_coface_is_identity(s):
    for i in range(1, s.q + 1):
        assert P.codegeneracy(P.coface(s, i), i - 1) == s
