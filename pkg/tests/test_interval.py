import itertools

import pytest
from hypothesis import given, strategies as st

from natops import interval as I
from natops import perm as P
from natops.complexes.cosimplicial import build_D, check_cosimplicial_identities, free_crossed
from natops.interval import FreeCrossedElement
from natops.perm import Perm

OBJECTS = range(-1, 3)


def all_morphisms(objects=OBJECTS):
    for m in objects:
        for n in objects:
            yield from I.hom(m, n)


def test_order_preserving_examples():
    assert I.is_order_preserving(I.identity(2))
    assert all(I.is_order_preserving(g) for g in I.hom(-1, 3))
    swap = I.automorphism(Perm.of(2, 1))
    assert not I.is_order_preserving(swap)


def test_hom_cardinalities():
    for k in range(5):
        assert len(list(I.hom(-1, k - 1))) == 1
    assert len(list(I.hom(0, 0))) == 3


def test_generators():
    s0 = I.codegeneracy_generator(1, 0)
    assert (s0.src, s0.dst) == (0, 1) and s0.values == (-1, 1, 2)
    d1 = I.coface_generator(2, 1)
    assert (d1.src, d1.dst) == (1, 0) and d1.values == (-1, 0, 0, 1)
    with pytest.raises(ValueError):
        I.coface_generator(2, 3)


def test_category_laws():
    morphisms = list(all_morphisms())
    by_src = {}
    for f in morphisms:
        by_src.setdefault(f.src, []).append(f)
    for f in morphisms:
        assert I.compose(I.identity(f.dst), f) == f
        assert I.compose(f, I.identity(f.src)) == f
    for f in all_morphisms(range(-1, 2)):
        for g in by_src.get(f.dst, []):
            for h in by_src.get(g.dst, []):
                assert I.compose(h, I.compose(g, f)) == I.compose(I.compose(h, g), f)


@given(st.sampled_from(list(all_morphisms())), st.data())
def test_associativity_sampled(f, data):
    g = data.draw(st.sampled_from(list(I.hom(f.dst, data.draw(st.sampled_from(list(OBJECTS)))))))
    h = data.draw(st.sampled_from(list(I.hom(g.dst, data.draw(st.sampled_from(list(OBJECTS)))))))
    assert I.compose(h, I.compose(g, f)) == I.compose(I.compose(h, g), f)


def test_compose_mismatch():
    with pytest.raises(ValueError):
        I.compose(I.identity(1), I.identity(0))


def test_unique_factorization():
    for f in all_morphisms():
        phi, h = I.factorize(f)
        assert I.is_order_preserving(phi)
        assert I.compose(phi, I.automorphism(h)) == f
        others = [(psi, k) for psi in I.hom_order_preserving(f.src, f.dst)
                  for k in P.all_perms(f.src + 1)
                  if I.compose(psi, I.automorphism(k)) == f]
        assert others == [(phi, h)]


def test_crossed_action_exhaustive():
    for h in P.all_perms(3):
        for phi in I.hom_order_preserving(1, 2):
            k, psi = I.crossed_action(h, phi)
            assert I.is_order_preserving(psi)
            assert I.compose(I.automorphism(h), phi) == I.compose(psi, I.automorphism(k))
    phi = I.codegeneracy_generator(2, 1)
    assert I.crossed_action(Perm.identity(3), phi) == (Perm.identity(2), phi)


def test_embedding():
    e = I.embed_into_deltaS(I.identity(0))
    assert (e.src, e.dst) == (2, 2) and e.values == (0, 1, 2)
    e = I.embed_into_deltaS(I.coface_generator(2, 1))
    assert (e.src, e.dst) == (3, 2) and e.values == (0, 1, 1, 2)


def test_crossed_relations():
    for n in range(5):
        for h, h2 in itertools.product(P.all_perms(n), repeat=2):
            prod = P.compose(h2, h)
            for i in range(n + 2):
                assert P.coface(prod, i) == P.compose(P.coface(h2, P.bar_index(h, i)), P.coface(h, i))
            for i in range(n):
                assert P.codegeneracy(prod, i) == P.compose(P.codegeneracy(h2, P.under_index(h, i)),
                                                            P.codegeneracy(h, i))


def test_crossed_squares():
    for n in range(1, 5):
        for h in P.all_perms(n):
            for i in range(n + 2):
                assert I.compose(I.automorphism(h), I.coface_generator(n + 1, P.bar_index(h, i))) == \
                    I.compose(I.coface_generator(n + 1, i), I.automorphism(P.coface(h, i)))
            for i in range(n):
                assert I.compose(I.automorphism(h), I.codegeneracy_generator(n - 1, P.under_index(h, i))) == \
                    I.compose(I.codegeneracy_generator(n - 1, i), I.automorphism(P.codegeneracy(h, i)))


def test_free_coface_examples():
    def cof(x, j):
        return {("d", j, x): 1}

    e = FreeCrossedElement("x", Perm.identity(2))
    assert I.free_coface(e, 1, cof) == {FreeCrossedElement(("d", 1, "x"), Perm.identity(3)): 1}
    h = Perm.of(2, 1)
    assert I.free_coface(FreeCrossedElement("x", h), 0, cof) == \
        {FreeCrossedElement(("d", 0, "x"), Perm.of(1, 3, 2)): 1}


@pytest.mark.parametrize("q", range(4))
def test_free_crossed_is_cosimplicial(q):
    assert check_cosimplicial_identities(free_crossed(build_D(q, 4))) == []


@given(st.sampled_from(list(all_morphisms())))
def test_json_round_trip(f):
    assert I.IntervalMorphism.from_json(f.to_json()) == f
