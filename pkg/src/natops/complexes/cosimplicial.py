"""Cosimplicial chain complexes, the models D[q] and D^[q], the free crossed
functor, the nerve functor and the sign-weighted projection m.

Generators of D[q]^n are weakly increasing tuples (a_0..a_n) with entries in
0..q; D^[q] also has the empty tuple in degree -1.  A cosimplicial chain
complex is materialized up to a top cosimplicial degree N; cofaces out of
degree N are not available (quotient truncation).
"""

from __future__ import annotations

import itertools
import random
from typing import Callable, Hashable, Iterable

from .. import perm as P
from ..interval import FreeCrossedElement, free_coface, free_codegeneracy
from ..linalg import SparseMatrix
from .chain import Bicomplex, ChainComplex

Sum = dict


def _add(acc: dict, terms: dict, c: int = 1) -> None:
    for x, v in terms.items():
        nv = acc.get(x, 0) + c * v
        if nv:
            acc[x] = nv
        else:
            acc.pop(x, None)


class Cosimplicial:
    """A cosimplicial chain complex materialized in degrees lo..N.

    ``basis[(n, k)]`` lists generators of C^n_k.  The structure maps act on
    generators and return formal sums:
      coface(x, n, i)        C^n -> C^{n+1}, 0 <= i <= n+1
      codegeneracy(x, n, i)  C^{n+1} -> C^n, 0 <= i <= n
      boundary(x, n, k)      C^n_k -> C^n_{k-1}
    """

    def __init__(self, N: int, basis: dict[tuple[int, int], list],
                 coface: Callable, codegeneracy: Callable,
                 boundary: Callable | None = None, lo: int = 0, name: str = ""):
        self.N = N
        self.lo = lo
        self.basis = basis
        self._coface = coface
        self._codegeneracy = codegeneracy
        self._boundary = boundary or (lambda x, n, k: {})
        self.name = name

    def chain_degrees(self) -> list[int]:
        return sorted({k for (_, k) in self.basis})

    def gens(self, n: int) -> list[tuple[int, Hashable]]:
        return [(k, x) for k in self.chain_degrees() for x in self.basis.get((n, k), ())]

    def coface(self, x, n: int, i: int) -> dict:
        if not 0 <= i <= n + 1:
            raise ValueError(f"coface index {i} out of range in degree {n}")
        return self._coface(x, n, i)

    def codegeneracy(self, x, n: int, i: int) -> dict:
        if not 0 <= i <= n:
            raise ValueError(f"codegeneracy index {i} out of range in degree {n}")
        return self._codegeneracy(x, n, i)

    def boundary(self, x, n: int, k: int) -> dict:
        return self._boundary(x, n, k)


# -- the models -----------------------------------------------------------

def simplex_gens(q: int, n: int) -> list[tuple[int, ...]]:
    if n < 0:
        return [()] if n == -1 else []
    return list(itertools.combinations_with_replacement(range(q + 1), n + 1))


def d_coface(q: int, a: tuple, i: int) -> dict:
    """d_i<a_0..a_n> = sum over a_{i-1} <= s <= a_i of <.., s inserted at i, ..>."""
    n = len(a) - 1
    lo = a[i - 1] if i >= 1 else 0
    hi = a[i] if i <= n else q
    return {a[:i] + (s,) + a[i:]: 1 for s in range(lo, hi + 1)}


def d_codegeneracy(q: int, b: tuple, i: int) -> dict:
    """Transpose of the degeneracy repeating entry i: keeps b iff b_i = b_{i+1}."""
    if b[i] == b[i + 1]:
        return {b[:i + 1] + b[i + 2:]: 1}
    return {}


def build_D(q: int, N: int) -> Cosimplicial:
    basis = {(n, 0): simplex_gens(q, n) for n in range(0, N + 1)}
    return Cosimplicial(N, basis,
                        coface=lambda x, n, i: d_coface(q, x, i),
                        codegeneracy=lambda x, n, i: d_codegeneracy(q, x, i),
                        name=f"D[{q}]")


def build_Dhat(q: int, N: int) -> Cosimplicial:
    basis = {(n, 0): simplex_gens(q, n) for n in range(-1, N + 1)}
    return Cosimplicial(N, basis,
                        coface=lambda x, n, i: d_coface(q, x, i),
                        codegeneracy=lambda x, n, i: d_codegeneracy(q, x, i),
                        lo=-1, name=f"Dhat[{q}]")


def constant(N: int) -> Cosimplicial:
    """The constant cosimplicial group Z (all structure maps the identity)."""
    basis = {(n, 0): ["*"] for n in range(0, N + 1)}
    return Cosimplicial(N, basis, lambda x, n, i: {x: 1}, lambda x, n, i: {x: 1},
                        name="const")


def monotone_maps(p: int, q: int) -> list[tuple[int, ...]]:
    """Non-decreasing maps [p] -> [q] as value tuples."""
    return list(itertools.combinations_with_replacement(range(q + 1), p + 1))


def pullback(phi: tuple[int, ...], b: tuple) -> dict:
    """phi^* : D[q] -> D[p], <b> |-> sum of <a> with phi(a) = b."""
    p = len(phi) - 1
    pre = [[s for s in range(p + 1) if phi[s] == v] for v in b]
    out = {}
    for choice in itertools.product(*pre):
        if all(choice[j] <= choice[j + 1] for j in range(len(choice) - 1)):
            out[tuple(choice)] = out.get(tuple(choice), 0) + 1
    return out


def two_term(q: int, p: int, maps: list[tuple[int, tuple]], N: int) -> Cosimplicial:
    """D[q] in chain degree 1 mapped to D[p] in chain degree 0 by sum c * phi^*."""
    basis = {}
    for n in range(0, N + 1):
        basis[(n, 1)] = [(1, a) for a in simplex_gens(q, n)]
        basis[(n, 0)] = [(0, a) for a in simplex_gens(p, n)]

    def cof(x, n, i):
        tag, a = x
        return {(tag, b): v for b, v in d_coface(q if tag else p, a, i).items()}

    def codeg(x, n, i):
        tag, a = x
        return {(tag, b): v for b, v in d_codegeneracy(q if tag else p, a, i).items()}

    def bd(x, n, k):
        tag, a = x
        if not tag:
            return {}
        out: dict = {}
        for c, phi in maps:
            _add(out, {(0, b): v for b, v in pullback(phi, a).items()}, c)
        return out

    return Cosimplicial(N, basis, cof, codeg, bd, name=f"D[{q}]->D[{p}]")


def direct_sum(parts: list[tuple[Cosimplicial, int]], N: int) -> Cosimplicial:
    """Sum of cosimplicial complexes, the j-th shifted up by a chain degree."""
    basis: dict = {}
    for j, (c, shift) in enumerate(parts):
        for (n, k), gens in c.basis.items():
            if 0 <= n <= N:
                basis.setdefault((n, k + shift), []).extend((j, x) for x in gens)

    def lift(j, terms):
        return {(j, y): v for y, v in terms.items()}

    def cof(x, n, i):
        j, y = x
        return lift(j, parts[j][0].coface(y, n, i))

    def codeg(x, n, i):
        j, y = x
        return lift(j, parts[j][0].codegeneracy(y, n, i))

    def bd(x, n, k):
        j, y = x
        c, shift = parts[j]
        return lift(j, c.boundary(y, n, k - shift))

    return Cosimplicial(N, basis, cof, codeg, bd, name="+".join(c.name for c, _ in parts))


def random_cosimplicial(rng: random.Random, N: int) -> Cosimplicial:
    """A small torsion-free cosimplicial chain complex in chain degrees 0, 1."""
    parts = []
    for _ in range(rng.randint(1, 2)):
        kind = rng.choice(["D", "D", "const", "two"])
        if kind == "D":
            parts.append((build_D(rng.randint(0, 2), N), rng.randint(0, 1)))
        elif kind == "const":
            parts.append((constant(N), rng.randint(0, 1)))
        else:
            q, p = rng.randint(0, 2), rng.randint(0, 2)
            phis = monotone_maps(p, q)
            maps = [(rng.choice([-2, -1, 1, 2, 3]), rng.choice(phis))
                    for _ in range(rng.randint(1, 2))]
            parts.append((two_term(q, p, maps, N), 0))
    return direct_sum(parts, N)


# -- free crossed functor -------------------------------------------------

def free_crossed(c: Cosimplicial) -> Cosimplicial:
    """F_S(C)^n = C^n x S_n with the twisted structure maps."""
    if c.lo < 0:
        raise ValueError("the free crossed functor needs degrees >= 0")
    perms = {n: list(P.all_perms(n)) for n in range(0, c.N + 1)}
    basis = {(n, k): [FreeCrossedElement(x, s) for x in gens for s in perms[n]]
             for (n, k), gens in c.basis.items()}

    def cof(e, n, i):
        return free_coface(e, i, lambda x, j: c.coface(x, n, j))

    def codeg(e, n, i):
        return free_codegeneracy(e, i, lambda x, j: c.codegeneracy(x, n, j))

    def bd(e, n, k):
        return {FreeCrossedElement(y, e.perm): v for y, v in c.boundary(e.base, n, k).items()}

    return Cosimplicial(c.N, basis, cof, codeg, bd, name=f"F_S({c.name})")


def iota(x) -> FreeCrossedElement:
    return FreeCrossedElement(x, P.Perm.identity(_degree_hint(x)))


def _degree_hint(x) -> int:
    # generators of the D-models carry their degree as tuple length - 1
    return len(x) - 1


# -- structure checks -----------------------------------------------------

def _apply(fn, terms: dict) -> dict:
    out: dict = {}
    for x, v in terms.items():
        _add(out, fn(x), v)
    return out


def check_cosimplicial_identities(c: Cosimplicial, top: int | None = None) -> list[str]:
    """Return the list of violated identities (empty when all hold).

    Codegeneracies land in degrees >= 0 only (an augmentation has none).
    """
    top = c.N if top is None else top
    cod_lo = max(c.lo, 0)
    bad = []
    for n in range(c.lo, top + 1):
        for k, x in c.gens(n):
            if n + 2 <= top:
                for j in range(n + 3):
                    for i in range(j):
                        lhs = _apply(lambda y: c.coface(y, n + 1, j), c.coface(x, n, i))
                        rhs = _apply(lambda y: c.coface(y, n + 1, i), c.coface(x, n, j - 1))
                        if lhs != rhs:
                            bad.append(f"d{j}d{i} on {x!r}")
            if cod_lo <= n < top:
                for j in range(n + 1):
                    for i in range(n + 2):
                        lhs = _apply(lambda y: c.codegeneracy(y, n, j), c.coface(x, n, i))
                        if i in (j, j + 1):
                            rhs = {x: 1}
                        elif n - 1 < cod_lo:
                            continue
                        elif i < j:
                            rhs = _apply(lambda y: c.coface(y, n - 1, i),
                                         c.codegeneracy(x, n - 1, j - 1))
                        else:
                            rhs = _apply(lambda y: c.coface(y, n - 1, i - 1),
                                         c.codegeneracy(x, n - 1, j))
                        if lhs != rhs:
                            bad.append(f"s{j}d{i} on {x!r}")
            if n - 2 >= cod_lo:
                m = n - 2
                for j in range(m + 1):
                    for i in range(j + 1):
                        lhs = _apply(lambda y: c.codegeneracy(y, m, j), c.codegeneracy(x, m + 1, i))
                        rhs = _apply(lambda y: c.codegeneracy(y, m, i), c.codegeneracy(x, m + 1, j + 1))
                        if lhs != rhs:
                            bad.append(f"s{j}s{i} on {x!r}")
            if n < top:
                for i in range(n + 2):
                    lhs = _apply(lambda y: c.boundary(y, n + 1, k), c.coface(x, n, i))
                    rhs = _apply(lambda y: c.coface(y, n, i), c.boundary(x, n, k))
                    if lhs != rhs:
                        bad.append(f"boundary/d{i} on {x!r}")
    return bad


# -- nerve and totalization ----------------------------------------------

def nerve(c: Cosimplicial) -> Bicomplex:
    """d = sum_i (-1)^{i+m} d_i horizontally; (-1)^m times the inherited
    boundary vertically so that d and dv anticommute."""
    index = {key: {x: i for i, x in enumerate(g)} for key, g in c.basis.items()}
    d, dv = {}, {}
    for (m, k), gens in c.basis.items():
        if m < c.N and (m + 1, k) in index:
            tgt = index[(m + 1, k)]
            entries = []
            for col, x in enumerate(gens):
                for i in range(m + 2):
                    s = -1 if (i + m) % 2 else 1
                    for y, v in c.coface(x, m, i).items():
                        entries.append((tgt[y], col, s * v))
            d[(m, k)] = SparseMatrix.from_entries(len(tgt), len(gens), entries)
        if (m, k - 1) in index:
            tgt = index[(m, k - 1)]
            s = -1 if m % 2 else 1
            entries = [(tgt[y], col, s * v) for col, x in enumerate(gens)
                       for y, v in c.boundary(x, m, k).items()]
            dv[(m, k)] = SparseMatrix.from_entries(len(tgt), len(gens), entries)
    return Bicomplex(c.basis, d, dv)


def nerve_complex(c: Cosimplicial, k: int = 0) -> ChainComplex:
    """The single row k of the nerve, as a cochain complex in degrees lo..N."""
    b = nerve(c)
    basis = {m: c.basis.get((m, k), []) for m in range(c.lo, c.N + 1)}
    diff = {m: b.d[(m, k)] for m in range(c.lo, c.N) if (m, k) in b.d}
    return ChainComplex(basis, diff)


def stable_window(c: Cosimplicial) -> tuple[int, int]:
    """Total degrees whose homology is unaffected by the cut at degree N."""
    ks = c.chain_degrees()
    return (c.lo - max(ks), c.N - 1 - max(ks))


def miraculous(element: dict) -> dict:
    """m(a, sigma) = sgn(sigma) a, extended linearly."""
    out: dict = {}
    for e, v in element.items():
        _add(out, {e.base: P.sign(e.perm) * v})
    return out


def miraculous_matrix(fc: Cosimplicial, c: Cosimplicial, n: int, k: int) -> SparseMatrix:
    src = fc.basis.get((n, k), [])
    tgt = {x: i for i, x in enumerate(c.basis.get((n, k), []))}
    entries = [(tgt[e.base], col, P.sign(e.perm)) for col, e in enumerate(src)]
    return SparseMatrix.from_entries(len(tgt), len(src), entries)


def iota_matrix(c: Cosimplicial, fc: Cosimplicial, n: int, k: int) -> SparseMatrix:
    src = c.basis.get((n, k), [])
    tgt = {x: i for i, x in enumerate(fc.basis.get((n, k), []))}
    one = P.Perm.identity(n)
    entries = [(tgt[FreeCrossedElement(x, one)], col, 1) for col, x in enumerate(src)]
    return SparseMatrix.from_entries(len(tgt), len(src), entries)


def coface_matrix(c: Cosimplicial, n: int, k: int, i: int) -> SparseMatrix:
    src = c.basis.get((n, k), [])
    tgt = {x: j for j, x in enumerate(c.basis.get((n + 1, k), []))}
    entries = [(tgt[y], col, v) for col, x in enumerate(src)
               for y, v in c.coface(x, n, i).items()]
    return SparseMatrix.from_entries(len(tgt), len(src), entries)


def cosimplicial_map_commutes(f: Callable[[int, int], SparseMatrix],
                              a: Cosimplicial, b: Cosimplicial) -> bool:
    """Check that degreewise matrices f(n, k) : A^n_k -> B^n_k commute with cofaces."""
    for (n, k) in a.basis:
        if n >= a.N:
            continue
        for i in range(n + 2):
            lhs = f(n + 1, k) @ coface_matrix(a, n, k, i)
            rhs = coface_matrix(b, n, k, i) @ f(n, k)
            if lhs != rhs:
                return False
    return True


def iter_gens(c: Cosimplicial, n: int) -> Iterable:
    for _, x in c.gens(n):
        yield x
