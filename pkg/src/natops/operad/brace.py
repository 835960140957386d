"""The brace suboperads Br and its non-unital version, as truncated families.

Elements of Br(n) are infinite families over all input colours; they are
handled through their images in the quotient complex Q_L = B(n)/{l > L},
which is degreewise finite.  The span of the generator composites is a
subcomplex of Q_L (Br is closed under d); its homology is computed from an
integral echelon basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..complexes.chain import ChainComplex, Homology
from ..linalg import SparseMatrix, column_hermite, solve_in_basis
from ..perm import Perm, all_perms
from . import dg
from .dg import Chain, Convention, DEFAULT
from .generators import brace_terms, cup_generator, identity_tree
from .trees import DOT


def cup_family(L: int) -> Chain:
    out = Chain()
    for k1 in range(L + 1):
        for k2 in range(L + 1 - k1):
            out.add(cup_generator(k1, k2), 1)
    return out


def brace_family(r: int, L: int) -> Chain:
    """f{g_2..g_{r+1}} summed over all colours with output colour <= L."""
    out = Chain()
    for k in range(r, L + r + 1):
        for ms in itertools.product(range(L + 1), repeat=r):
            if k - r + sum(ms) <= L:
                for c, t in brace_terms(k, ms):
                    out.add(t, c)
    return out


def identity_family(L: int) -> Chain:
    return Chain({identity_tree(k): 1 for k in range(L + 1)})


def unit_family() -> Chain:
    return Chain({DOT: 1})


GENERATORS = {"cup": (2, 0), "brace2": (2, -1), "brace3": (3, -2)}


def generator_family(name: str, L: int) -> Chain:
    if name == "cup":
        return cup_family(L)
    if name == "brace2":
        return brace_family(1, L)
    if name == "brace3":
        return brace_family(2, L)
    raise ValueError(f"unknown generator {name!r}")


def truncate(x: Chain, L: int) -> Chain:
    return x.restrict(lambda tt: tt.l <= L)


def composite(outer: str, i: int, inner: str, L: int, conv: Convention = DEFAULT) -> Chain:
    """outer o_i inner, truncated to output colour <= L."""
    n_out, d_out = GENERATORS[outer]
    a = generator_family(outer, L)
    b = generator_family(inner, L - d_out)
    return truncate(dg.compose(a, i, b, conv), L)


@dataclass
class SpanElement:
    label: str
    degree: int
    chain: Chain


def spanning_families(n: int, L: int, conv: Convention = DEFAULT) -> list[SpanElement]:
    """Composites of cup and braces of arity n with all symmetric relabellings."""
    raw: list[tuple[str, int, Chain]] = []
    for name, (ar, deg) in GENERATORS.items():
        if ar == n:
            raw.append((name, deg, generator_family(name, L)))
    if n == 3:
        for x, y in itertools.product(("cup", "brace2"), repeat=2):
            for i in (1, 2):
                deg = GENERATORS[x][1] + GENERATORS[y][1]
                raw.append((f"{x}o{i}{y}", deg, composite(x, i, y, L, conv)))
    if n > 3:
        raise ValueError("spanning families are implemented for arity <= 3")
    out = []
    for label, deg, ch in raw:
        for sigma in all_perms(n):
            out.append(SpanElement(f"{label}.{sigma.images}", deg, dg.act(ch, sigma, conv)))
    return out


@dataclass
class SpanComplex:
    n: int
    L: int
    bases: dict[int, list[dict]]
    complex: ChainComplex
    closed: bool

    def homology(self) -> dict[int, Homology]:
        return {d: self.complex.homology(d) for d in sorted(self.bases)}

    def ranks(self) -> dict[int, int]:
        return {d: h.betti for d, h in self.homology().items()}


def span_complex(n: int, L: int, conv: Convention = DEFAULT) -> SpanComplex:
    """The image of Br-hat(n) in Q_L with its differential."""
    fams = spanning_families(n, L, conv)
    degrees = sorted({f.degree for f in fams})
    bases = {}
    for deg in degrees:
        vecs = [dict(f.chain.terms) for f in fams if f.degree == deg and f.chain]
        bases[deg] = column_hermite(vecs)
    closed = True
    diff = {}
    for deg in degrees:
        tgt = bases.get(deg + 1, [])
        cols = []
        for b in bases[deg]:
            db = truncate(dg.differential(Chain(b), conv), L)
            coeffs = solve_in_basis(tgt, dict(db.terms)) if db else [0] * len(tgt)
            if coeffs is None:
                closed = False
                coeffs = [0] * len(tgt)
            cols.append({r: v for r, v in enumerate(coeffs) if v})
        if tgt:
            diff[deg] = SparseMatrix(len(tgt), len(cols), cols)
    basis = {deg: list(range(len(bases[deg]))) for deg in degrees}
    return SpanComplex(n, L, bases, ChainComplex(basis, diff), closed)


def closure_defects(n: int, L: int, conv: Convention = DEFAULT) -> list[str]:
    """Generators whose differential leaves the span (empty when Br is closed)."""
    fams = spanning_families(n, L, conv)
    spans = {}
    for deg in {f.degree for f in fams}:
        spans[deg] = column_hermite([dict(f.chain.terms) for f in fams if f.degree == deg and f.chain])
    bad = []
    for f in fams:
        d = truncate(dg.differential(f.chain, conv), L)
        if d and solve_in_basis(spans.get(f.degree + 1, []), dict(d.terms)) is None:
            bad.append(f.label)
    return bad
