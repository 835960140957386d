import pytest
from hypothesis import given, strategies as st

from natops.complexes.chain import Homology
from natops.operad import trees as T
from natops.operad.brace import closure_defects, span_complex
from natops.operad.certify import d_squared_failures, judge, leibniz_failures, quick_failures
from natops.operad.dg import Convention, DEFAULT, candidates
from natops.operad.enumerate import enumerate_basis, types_in_window
from natops.operad.generators import cup_generator, generator_codegeneracy
from natops.operad.truncation import (bhat_zero_homology, degeneracy_image, in_bhat, is_planar, join_labels,
                                      row_homology, split_labels, stable_homology, stub_trees,
                                      suboperad_filter, truncated_complex)
from natops.operad.trees import DOT, TreeType

SMALL = [t for n in range(3) for tt in types_in_window(n, 3, 3) for t in enumerate_basis(tt)]


def test_filters():
    cup = cup_generator(1, 1)
    assert suboperad_filter(cup, "T") and suboperad_filter(cup, "Bhat")
    stub = generator_codegeneracy(1, 0)
    assert not suboperad_filter(stub, "Bhat")
    assert suboperad_filter({stub: 3, cup: 1}, "NormB") == {cup: 1}
    assert suboperad_filter(DOT, "NormB") and not suboperad_filter(DOT, "NormB", keep_dot=False)
    with pytest.raises(ValueError):
        suboperad_filter(cup, "Q")


@given(st.sampled_from(SMALL))
def test_split_labels_round_trip(t):
    planar, sigma = split_labels(t)
    assert is_planar(planar)
    assert join_labels(planar, sigma) == t
    if is_planar(t):
        assert planar == t and sigma.is_identity()


@pytest.mark.parametrize("tt", [TreeType(l, ks) for l in range(3) for ks in [(1,), (2,), (3,), (1, 1), (2, 1)]],
                         ids=str)
def test_stubs_are_degeneracy_images(tt):
    for j in range(1, tt.n + 1):
        assert stub_trees(tt, j) == degeneracy_image(tt, j)


@pytest.mark.parametrize("n,K,L", [(0, 0, 4), (1, 2, 3), (1, 3, 3), (2, 2, 2)])
def test_truncations_are_complexes(n, K, L):
    for which in ("B", "Bhat", "T"):
        assert truncated_complex(n, K, L, which).check_d_squared()


def test_truncation_rejects_negative_bounds():
    with pytest.raises(ValueError):
        truncated_complex(1, -1, 2)


def test_bhat_zero_acyclic():
    assert all(h.is_zero() for h in bhat_zero_homology(6).values())
    assert all(h.is_zero() for m, h in bhat_zero_homology(6, keep_dot=True).items() if m >= 2)


@pytest.mark.parametrize("k", range(4))
def test_rows_acyclic(k):
    assert all(h.is_zero() for h in row_homology((k,), 5).values())


def test_B1_has_H0():
    for L in (2, 3, 4):
        assert truncated_complex(1, L + 1, L).complex.homology(0) == Homology(1)
    h, stable = stable_homology(1, 3, 2, [0])
    assert stable and h[0] == Homology(1)


@pytest.mark.parametrize("n,ranks", [(2, {0: 1, -1: 1}), (3, {0: 1, -1: 3, -2: 2})])
def test_brace_homology(n, ranks):
    for L in (3, 4):
        sc = span_complex(n, L)
        assert sc.closed and sc.complex.check_d_squared()
        assert sc.ranks() == ranks
        assert all(not h.torsion for h in sc.homology().values())


def test_default_convention_small_windows():
    assert d_squared_failures(2, 2, 3)[1] == []
    assert leibniz_failures(2, 2, 2)[1] == []
    assert closure_defects(2, 3) == []


def test_rejected_conventions_fail_somewhere():
    nerve = Convention("arity", "nerve", "brace")
    assert quick_failures(nerve) == {"d squared": True, "leibniz": True}
    assert closure_defects(2, 3, nerve) or closure_defects(3, 3, nerve)
    assert not quick_failures(Convention("none", "plain", "none"))["d squared"]
    assert not judge(Convention("arity", "plain", "none"), samples=0).survives
    assert len(candidates()) == 12 and DEFAULT in candidates()
