import itertools

import pytest
from hypothesis import given, strategies as st

from natops import interval as I
from natops.hochschild import (AlgebraElement, SymbolicCochain, bar_action, build_l9_witness, coefficient,
                               evaluate, generators, genericity_check, genericity_matrix, monomial, product,
                               witness_entry)
from natops.operad.enumerate import enumerate_basis, types_in_window
from natops.operad.generators import realize_interval
from natops.operad.trees import BAR, DOT, TreeType, white, leg
from natops.perm import Perm
from natops.verify import WORKED_TREE

x = AlgebraElement.gen


def test_coefficient_examples():
    e = AlgebraElement.mono((1, 2), 3)
    assert coefficient(e, (1, 2)) == 3
    assert coefficient(e, (2, 1)) == 0
    f = x(1) * x(2) + x(3)
    assert coefficient(e + f, (1, 2)) == coefficient(e, (1, 2)) + coefficient(f, (1, 2))
    with pytest.raises(ValueError):
        monomial(0)


def test_exceptional_trees():
    assert evaluate(BAR, [], [x(5)]) == x(5)
    assert evaluate(DOT, [], []) == AlgebraElement.one()
    with pytest.raises(ValueError):
        evaluate(BAR, [], [])


def test_fig2_witness():
    w = build_l9_witness(WORKED_TREE)
    assert w.values == {1: 9, 2: 10, 3: 11, 4: 12}
    assert w.cochains[0].table == {((10,), (1,), (11,)): x(9)}
    assert w.cochains[2].table == {((7,),): x(11)}
    assert w.cochains[3].table == {((4,), (), (2,)): x(12)}
    assert w.cochains[1].table == {((5, 6), (), (8,)): x(10)}
    val = evaluate(WORKED_TREE, w.cochains, generators(8))
    assert val == AlgebraElement.mono((3, 9, 12))
    assert witness_entry(WORKED_TREE, w) == 1


def test_small_witnesses():
    t = white(1, leg(1), leg(2), leg(3))
    w = build_l9_witness(t)
    assert w.target == (4,)
    w = build_l9_witness(white(1, DOT))
    assert w.cochains[0].table == {((),): x(1)} and w.target == (1,)


def test_genericity_examples():
    for k in range(4):
        assert genericity_check(TreeType(0, (k,)))
    basis = enumerate_basis(TreeType(1, (1,)))
    assert genericity_matrix(basis, 1) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


@pytest.mark.parametrize("tt", [tt for n in range(3) for tt in types_in_window(n, 2, 2)], ids=str)
def test_genericity_fast_and_slow_agree(tt):
    assert genericity_check(tt, fast=True)
    assert genericity_check(tt, fast=False)


def _tensor(m):
    return [AlgebraElement.gen(50 + i) for i in range(m + 3)]


def test_bar_action_examples():
    t = _tensor(1)
    assert bar_action(I.identity(1), t) == t
    swap = I.automorphism(Perm.of(2, 1))
    merged = I.compose(I.coface_generator(2, 1), swap)
    out = bar_action(merged, t)
    assert out[1] == t[2] * t[1]
    with pytest.raises(ValueError):
        bar_action(I.identity(1), t[:-1])


def test_bar_action_functorial():
    for a, b, c in itertools.product(range(-1, 2), repeat=3):
        t = _tensor(a)
        for f in I.hom(a, b):
            fb = bar_action(f, t)
            for g in I.hom(b, c):
                assert bar_action(I.compose(g, f), t) == bar_action(g, fb)


def test_realization_matches_closed_formula():
    for l in range(4):
        for k in range(4):
            args = generators(l)
            f = lambda vals: product([x(90)] + [v * x(91) for v in vals])
            f.arity = k
            for g in I.hom(l - 1, k - 1):
                bars = bar_action(g, [AlgebraElement.one()] + args + [AlgebraElement.one()])
                want = bars[0] * f(bars[1:-1]) * bars[-1]
                assert evaluate(realize_interval(g), [f], args) == want


@given(st.dictionaries(st.tuples(st.integers(1, 3), st.integers(1, 3)), st.integers(-3, 3), max_size=3))
def test_symbolic_cochain_is_linear(table_seed):
    f = SymbolicCochain(1, {((i,),): x(j + 10) for (i, j) in table_seed})
    a, b = x(1) + x(2).scale(2), x(3)
    assert f([a + b]) == f([a]) + f([b])
