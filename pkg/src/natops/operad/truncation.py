"""Finite truncations of the totalized components B(n) and their suboperads.

The piece of B(n) with k_1 + ... + k_n <= K is a subcomplex (the inner
faces lower sum k), and dividing out all trees with l > L is a quotient (the
outer faces raise l).  Together they give a finite complex whose homology is
trusted only where it agrees across two sizes.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..complexes.chain import ChainComplex, Homology
from ..linalg import SparseMatrix
from ..perm import Perm
from . import trees as T
from .dg import Convention, DEFAULT, differential, tree_type
from .enumerate import enumerate_basis, types_in_window
from .generators import generator_codegeneracy
from .trees import DOT, Tree, TreeType

SUBOPERADS = ("B", "Bhat", "NormB", "T")


def is_planar(t: Tree) -> bool:
    """Membership in T: legs labelled 1..l counterclockwise."""
    ls = T.legs(t)
    return ls == list(range(1, len(ls) + 1))


def in_bhat(t: Tree) -> bool:
    return not T.has_stub(t) and t != DOT


def suboperad_filter(x, which: str, keep_dot: bool = True):
    """Restrict a tree or a combination of trees to a suboperad.

    For T and Bhat this is membership (a tree gives a bool, a sum its
    members); NormB is the projection killing trees with stubs, keeping the
    exceptional tree when keep_dot is set.
    """
    if which not in SUBOPERADS:
        raise ValueError(f"unknown suboperad {which!r}")
    keep = _predicate(which, keep_dot)
    if isinstance(x, tuple):
        return keep(x)
    return {t: c for t, c in x.items() if keep(t)}


def _predicate(which: str, keep_dot: bool):
    if which == "B":
        return lambda t: True
    if which == "T":
        return is_planar
    if which == "Bhat":
        return in_bhat
    return lambda t: in_bhat(t) or (keep_dot and t == DOT)


@dataclass
class TruncatedComponent:
    n: int
    K: int
    L: int
    which: str
    complex: ChainComplex

    def degrees(self) -> list[int]:
        return self.complex.degrees()

    def homology(self, degrees=None) -> dict[int, Homology]:
        degs = self.degrees() if degrees is None else degrees
        return {m: self.complex.homology(m) for m in degs}

    def check_d_squared(self) -> bool:
        return self.complex.check_d_squared()


def truncated_basis(n: int, K: int, L: int, which: str = "B", keep_dot: bool = False) -> dict[int, list[Tree]]:
    keep = _predicate(which, keep_dot)
    basis: dict[int, list[Tree]] = {}
    for tt in types_in_window(n, K, L):
        trees = [t for t in enumerate_basis(tt) if keep(t)]
        if trees:
            basis.setdefault(tt.degree, []).extend(trees)
    return basis


def _assemble(basis: dict[int, list[Tree]], keep_term, conv: Convention) -> ChainComplex:
    index = {m: {t: i for i, t in enumerate(b)} for m, b in basis.items()}
    diff = {}
    for m, b in basis.items():
        tgt = index.get(m + 1)
        if tgt is None:
            continue
        cols = []
        for t in b:
            col = {}
            for u, c in differential(t, conv).items():
                if keep_term(u):
                    col[tgt[u]] = c
            cols.append(col)
        diff[m] = SparseMatrix(len(basis[m + 1]), len(b), cols)
    return ChainComplex(basis, diff)


def truncated_complex(n: int, K: int, L: int, which: str = "B", keep_dot: bool = False,
                      conv: Convention = DEFAULT) -> TruncatedComponent:
    """Trees with sum k <= K and l <= L, graded by l - sum k."""
    if min(n, K, L) < 0:
        raise ValueError("bounds must be non-negative")
    if which not in SUBOPERADS:
        raise ValueError(f"unknown suboperad {which!r}")
    basis = truncated_basis(n, K, L, which, keep_dot)
    keep = _predicate(which, keep_dot)

    def keep_term(u):
        tt = tree_type(u)
        return tt.l <= L and sum(tt.ks) <= K and keep(u)

    return TruncatedComponent(n, K, L, which, _assemble(basis, keep_term, conv))


def row_complex(ks: tuple[int, ...], L: int, conv: Convention = DEFAULT) -> ChainComplex:
    """The row B^0_k -> B^1_k -> ... -> B^L_k with the outer part of d."""
    ks = tuple(ks)
    basis = {l: enumerate_basis(TreeType(l, ks)) for l in range(L + 1)}
    basis = {l: b for l, b in basis.items() if b}

    def keep_term(u):
        tt = tree_type(u)
        return tt.ks == ks and tt.l <= L

    return _assemble(basis, keep_term, conv)


def row_homology(ks, L: int, conv: Convention = DEFAULT) -> dict[int, Homology]:
    """Cohomology of a row in degrees 0..L-2 (the top is a truncation artifact)."""
    c = row_complex(ks, L - 1, conv)
    return {m: c.homology(m) for m in range(0, L - 1)}


def stable_homology(n: int, K: int, L: int, degrees, which: str = "B", keep_dot: bool = False,
                    conv: Convention = DEFAULT) -> tuple[dict[int, Homology], bool]:
    """Homology at (K, L) and whether it agrees with (K+1, L+1) in the degrees."""
    a = truncated_complex(n, K, L, which, keep_dot, conv).homology(degrees)
    b = truncated_complex(n, K + 1, L + 1, which, keep_dot, conv).homology(degrees)
    return a, a == b


def split_labels(t: Tree) -> tuple[Tree, Perm]:
    """t = (planar tree in T, sigma) with sigma(position) = leg label."""
    ls = T.legs(t)
    pos = {p: i + 1 for i, p in enumerate(ls)}
    return T.relabel_legs(t, pos), Perm(tuple(ls))


def join_labels(planar: Tree, sigma: Perm) -> Tree:
    return T.relabel_legs(planar, {i: sigma(i) for i in range(1, sigma.q + 1)})


def stub_trees(tt: TreeType, j: int) -> set[Tree]:
    """Trees of the type whose white vertex j has a special child."""
    out = set()
    for t in enumerate_basis(tt):
        for x in T.nodes(t):
            if x[0] == "W" and x[1] == j and any(c[0] == "S" for c in x[2]):
                out.add(t)
    return out


def degeneracy_image(tt: TreeType, j: int) -> set[Tree]:
    """Images of t o_j (codegeneracy tree) over trees t of the type with k_j
    lowered by one, i.e. of the j-th simplicial degeneracies."""
    k = tt.ks[j - 1]
    if k == 0:
        return set()
    lower = TreeType(tt.l, tt.ks[:j - 1] + (k - 1,) + tt.ks[j:])
    return {T.insert(t, j, generator_codegeneracy(k - 1, i))
            for t in enumerate_basis(lower) for i in range(k)}


def bhat_zero_homology(L: int, keep_dot: bool = False, conv: Convention = DEFAULT) -> dict[int, Homology]:
    """Cohomology of the truncated arity-0 component of Bhat in degrees 0..L-1."""
    c = truncated_complex(0, 0, L, "NormB" if keep_dot else "Bhat", keep_dot, conv).complex
    return {m: c.homology(m) for m in range(0, L)}
