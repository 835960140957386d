import itertools

import pytest
from hypothesis import given, strategies as st

from natops import interval as I
from natops import perm as P
from natops.hochschild import AlgebraElement, evaluate, generators, hochschild_coboundary, product
from natops.operad import trees as T
from natops.operad.dg import Chain, DEFAULT, d_by_insertion, delta_part, differential, leibniz_defect
from natops.operad.enumerate import count_basis, enumerate_basis, types_in_window
from natops.operad.generators import (brace_generator, cup_generator, generator_codegeneracy,
                                      generator_coface, identity_tree, realize_interval)
from natops.operad.sums import TreeSum, insert_sums
from natops.operad.trees import BAR, DOT, TreeType, black, leg, special, white

SMALL = [t for n in range(3) for tt in types_in_window(n, 3, 3) for t in enumerate_basis(tt)]
trees = st.sampled_from(SMALL)
BY_LEGS = {}
for _t in SMALL:
    BY_LEGS.setdefault(T.tree_type(_t).l, []).append(_t)


@st.composite
def slot_and_tree(draw, a):
    """A slot i of a and a tree b that fits it, or None."""
    ks = T.tree_type(a).ks
    slots = [i for i in range(1, len(ks) + 1) if ks[i - 1] in BY_LEGS]
    if not slots:
        return None
    i = draw(st.sampled_from(slots))
    return i, draw(st.sampled_from(BY_LEGS[ks[i - 1]]))


@st.composite
def composable(draw):
    a = draw(st.sampled_from([t for t in SMALL if T.tree_type(t).n]))
    i, b = draw(slot_and_tree(a))
    return a, i, b


def marker_cochain(j, k):
    """x_{100j} a_1 x_{100j+1} a_2 ... a_k x_{100j+k}: injective enough to tell trees apart."""
    def f(args):
        assert len(args) == k
        parts = [AlgebraElement.gen(100 * j)]
        for s, a in enumerate(args, start=1):
            parts += [a, AlgebraElement.gen(100 * j + s)]
        return product(parts)
    f.arity = k
    return f


def markers(ks):
    return [marker_cochain(j + 1, k) for j, k in enumerate(ks)]


def test_canonicalize_examples():
    t = white(1, leg(1), leg(2))
    assert T.canonicalize(t) == t
    assert T.canonicalize(black(black(leg(1), leg(2)), leg(3))) == black(leg(1), leg(2), leg(3))
    assert T.canonicalize(black(special(), leg(1))) == leg(1)
    assert T.canonicalize(black(special(), special())) == DOT


def test_enumerate_examples():
    for k in range(5):
        assert enumerate_basis(TreeType(0, (k,))) == [white(1, *[DOT] * k)]
    assert len(enumerate_basis(TreeType(1, (1,)))) == 3
    assert enumerate_basis(TreeType(1, ())) == [BAR]
    assert enumerate_basis(TreeType(0, ())) == [DOT]
    assert count_basis(TreeType(0, (2,))) == 1


@pytest.mark.parametrize("tt", [tt for n in range(3) for tt in types_in_window(n, 3, 3)], ids=str)
def test_enumeration_is_canonical_and_complete(tt):
    basis = enumerate_basis(tt)
    assert len(set(basis)) == len(basis) == count_basis(tt)
    for t in basis:
        T.validate(t, tt)
        assert T.canonicalize(t) == t


def test_basis_matches_hom_sets():
    for l in range(5):
        for k in range(5):
            homs = list(I.hom(l - 1, k - 1))
            assert len(homs) == count_basis(TreeType(l, (k,)))
            assert {realize_interval(g) for g in homs} == set(enumerate_basis(TreeType(l, (k,))))


def test_realize_examples():
    for k in range(4):
        assert realize_interval(I.identity(k - 1)) == identity_tree(k)
        assert realize_interval(next(I.hom(-1, k - 1))) == white(1, *[DOT] * k)


def test_functoriality_small():
    for a, b, c in itertools.product(range(-1, 2), repeat=3):
        for h in I.hom(a, b):
            for g in I.hom(b, c):
                assert realize_interval(I.compose(g, h)) == T.insert(realize_interval(h), 1, realize_interval(g))


def test_insert_unit_and_errors():
    t = black(leg(1), white(1, leg(2)))
    assert T.insert(t, 1, identity_tree(1)) == t
    assert T.insert(t, 1, BAR) == black(leg(1), leg(2))
    with pytest.raises(ValueError):
        T.insert(t, 1, white(1, leg(1), leg(2)))
    with pytest.raises(ValueError):
        T.insert(t, 2, BAR)


def test_insert_dot_deletes_vertex():
    t = black(leg(1), white(1), white(2, leg(2)))
    assert T.insert(t, 1, DOT) == black(leg(1), white(1, leg(2)))


@given(composable(), st.data())
def test_insert_associative(aib, data):
    a, i, b = aib
    if not T.tree_type(b).n:
        return
    j, c = data.draw(slot_and_tree(b))
    assert T.insert(T.insert(a, i, b), i + j - 1, c) == T.insert(a, i, T.insert(b, j, c))


@given(composable())
def test_insert_matches_evaluation(aib):
    a, i, b = aib
    ta, tb = T.tree_type(a), T.tree_type(b)
    fa, fb = markers(ta.ks), [marker_cochain(10 + j, k) for j, k in enumerate(tb.ks)]
    inner = lambda args: evaluate(b, fb, args)
    inner.arity = tb.l
    outer = fa[:i - 1] + [inner] + fa[i:]
    composed = fa[:i - 1] + fb + fa[i:]
    args = generators(ta.l)
    assert evaluate(T.insert(a, i, b), composed, args) == evaluate(a, outer, args)


@given(trees, st.data())
def test_equivariance(t, data):
    n = T.tree_type(t).n
    sigma = data.draw(st.permutations(range(1, n + 1)).map(lambda xs: P.Perm(tuple(xs))))
    assert T.sym_act(t, P.Perm.identity(n)) == t
    assert T.sym_act(T.sym_act(t, sigma), sigma.inverse()) == t
    ks = T.tree_type(t).ks
    fs = markers(ks)
    moved = [None] * n
    for j in range(1, n + 1):
        moved[sigma(j) - 1] = fs[j - 1]
    args = generators(T.tree_type(t).l)
    assert evaluate(T.sym_act(t, sigma), moved, args) == evaluate(t, fs, args)


def test_tree_json_round_trip():
    for t in SMALL[:300]:
        assert T.from_json(T.to_json(t)) == t
    with pytest.raises(ValueError):
        T.from_json({"kind": "grey", "children": []})


def test_generators_evaluate_to_faces():
    for l in range(4):
        f = marker_cochain(1, l)
        args = generators(l + 1)
        for i in range(l + 2):
            got = evaluate(generator_coface(l, i), [f], args)
            if i == 0:
                want = args[0] * f(args[1:])
            elif i == l + 1:
                want = f(args[:l]) * args[l]
            else:
                want = f(args[:i - 1] + [args[i - 1] * args[i]] + args[i + 1:])
            assert got == want
    f = marker_cochain(1, 3)
    a = generators(2)
    assert evaluate(generator_codegeneracy(2, 0), [f], a) == f([AlgebraElement.one()] + a)


def test_cup_and_brace():
    f, g = marker_cochain(1, 1), marker_cochain(2, 1)
    x = generators(2)
    assert evaluate(cup_generator(1, 1), [f, g], x) == f(x[:1]) * g(x[1:])
    s = brace_generator(2, (1,))
    assert len(s.terms) == 2 and set(s.terms.values()) == {1}
    assert len(brace_generator(4, (2, 1)).terms) == 6
    assert len(brace_generator(1, (1, 1)).terms) == 0


def test_tree_sum_algebra():
    tt = TreeType(1, (1,))
    a, b = enumerate_basis(tt)[:2]
    s = TreeSum.of(a, 2) + TreeSum.of(b) - TreeSum.of(a, 2)
    assert s == TreeSum.of(b)
    assert not (s - s)
    assert TreeSum.from_json(s.to_json()) == s
    with pytest.raises(ValueError):
        s + TreeSum.of(BAR)
    prod = insert_sums(TreeSum.of(identity_tree(1)), 1, TreeSum.of(b))
    assert prod == TreeSum.of(b)


def test_d_of_identity_is_hochschild():
    for k in range(4):
        f = marker_cochain(1, k)
        delta = delta_part(identity_tree(k))
        got = AlgebraElement()
        args = generators(k + 1)
        for t, c in delta.items():
            got = got + evaluate(t, [f], args).scale(c)
        assert got == hochschild_coboundary(f, k)(args)


@given(trees)
def test_d_squared(t):
    assert not differential(differential(t))


@given(trees)
def test_direct_faces_agree_with_insertion(t):
    assert differential(t) == d_by_insertion(t)


@given(composable())
def test_leibniz(aib):
    assert not leibniz_defect(*aib)


def test_chain_arithmetic():
    x = Chain({BAR: 2})
    assert not (x - x)
    assert Chain.of(BAR) == Chain({BAR: 1})
