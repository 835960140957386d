"""Splitting of the nerve of F_S(D[q]) into tensor products of D^-models.

A generator (<a_0..a_n>, sigma) is keyed by the contraction kappa(sigma) and
the entries x_0..x_m of a that survive deletion of every a_t lying between
two doubled strings, between '<' and a vertical string, or between a
vertical string and '>'.  The entries a_t live on the output side: a_t sits
between outputs t and t+1 of sigma.
"""

from __future__ import annotations

import itertools
from math import comb

from .. import perm as P
from ..perm import Perm
from .chain import Homology, kunneth
from .cosimplicial import build_D, build_Dhat, free_crossed, nerve, nerve_complex

IDENTITY_KEY = ("id",)


def _deleted(sigma: Perm) -> set[int]:
    n = sigma.q
    g = P.grade(sigma)
    inv = sigma.inverse()
    out = set(range(0, g.a))                 # '<' up to the leading vertical strings
    out |= set(range(n - g.c + 1, n + 1))    # trailing vertical strings up to '>'
    for t in range(1, n):
        if inv(t + 1) == inv(t) + 1 and not (t <= g.a or t > n - g.c):
            out.add(t)
    return out


def l1_key(a: tuple, sigma: Perm) -> tuple:
    if sigma.is_identity():
        return IDENTITY_KEY
    gone = _deleted(sigma)
    x = tuple(a[t] for t in range(len(a)) if t not in gone)
    return (P.contract(sigma).images, x)


def l1_factors(a: tuple, sigma: Perm, q: int) -> list[tuple[int, tuple]]:
    """The D^[width] generators whose tensor product the element maps to."""
    gone = _deleted(sigma)
    pieces, group, lo = [], [], 0
    for t, v in enumerate(a):
        if t in gone:
            group.append(v)
        else:
            pieces.append((v - lo, tuple(u - lo for u in group)))
            group, lo = [], v
    pieces.append((q - lo, tuple(u - lo for u in group)))
    return pieces


def l1_decompose(q: int, n: int) -> dict[tuple, int]:
    """Rank of each summand of F_S(D[q])^n, by classifying every generator."""
    ranks: dict[tuple, int] = {}
    gens = list(itertools.combinations_with_replacement(range(q + 1), n + 1))
    for sigma in P.all_perms(n):
        for a in gens:
            key = l1_key(a, sigma)
            ranks[key] = ranks.get(key, 0) + 1
    return ranks


def dhat_dim(p: int, e: int) -> int:
    """dim D^[p]^e: multisets of size e+1 from p+1 values."""
    if e < -1:
        return 0
    return comb(p + e + 1, e + 1)


def summand_dim(widths: list[int], degree: int) -> int:
    """Degree part of the tensor product of D^[w] over the widths."""
    total = 0
    k = len(widths)
    for es in _compositions(degree, k):
        prod = 1
        for w, e in zip(widths, es):
            prod *= dhat_dim(w, e)
            if not prod:
                break
        total += prod
    return total


def _compositions(total: int, parts: int):
    """Tuples of `parts` integers >= -1 summing to total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(-1, total + parts):
        rest = total - first
        if rest < -(parts - 1):
            break
        for tail in _compositions(rest, parts - 1):
            yield (first,) + tail


def widths_of(x: tuple, q: int) -> list[int]:
    bounds = (0,) + tuple(x) + (q,)
    return [bounds[j + 1] - bounds[j] for j in range(len(bounds) - 1)]


def rhs_dimension(q: int, n: int) -> int:
    """dim D[q]^n plus the summands over simple chi != 1 and monotone x."""
    total = comb(q + n + 1, n + 1)
    for m in range(2, n + 1):
        deg = n - 2 * m - 2
        if deg < -(m + 2):
            continue
        simples = len(P.simple_perms(m))
        if not simples:
            continue
        for x in itertools.combinations_with_replacement(range(q + 1), m + 1):
            total += simples * summand_dim(widths_of(x, q), deg)
    return total


def summand_ranks_predicted(q: int, n: int) -> dict[tuple, int]:
    out = {IDENTITY_KEY: comb(q + n + 1, n + 1)}
    for m in range(2, n + 1):
        deg = n - 2 * m - 2
        for chi in P.simple_perms(m):
            for x in itertools.combinations_with_replacement(range(q + 1), m + 1):
                r = summand_dim(widths_of(x, q), deg)
                if r:
                    out[(chi.images, x)] = r
    return out


def check_summand_invariance(q: int, N: int) -> bool:
    """Every coface of a generator of F_S(D[q]) keeps its (kappa, x) key."""
    fc = free_crossed(build_D(q, N))
    for n in range(0, N):
        for e in fc.basis[(n, 0)]:
            key = l1_key(e.base, e.perm)
            for i in range(n + 2):
                for f in fc.coface(e, n, i):
                    if l1_key(f.base, f.perm) != key:
                        return False
    return True


def dhat_homology(p: int, top: int) -> dict[int, Homology]:
    c = nerve_complex(build_Dhat(p, top + 1))
    return {d: c.homology(d) for d in range(-1, top + 1)}


def homology_via_l1(q: int, N: int) -> dict[int, Homology]:
    """H^i of the nerve of F_S(D[q]) for 0 <= i <= N-1 from the splitting.

    The identity summand contributes H(N D[q]); each other summand contributes
    the Kunneth product of the factor homologies, shifted up by 2m+2.
    """
    base = nerve_complex(build_D(q, N))
    out = {i: base.homology(i) for i in range(0, N)}
    cache: dict[tuple[int, int], dict[int, Homology]] = {}
    for m in range(2, N + 1):
        shift = 2 * m + 2
        top_t = N - 1 - shift
        if top_t < -(m + 2):
            continue
        chis = P.simple_perms(m)
        if not chis:
            continue
        bound = top_t + m + 2
        for x in itertools.combinations_with_replacement(range(q + 1), m + 1):
            acc: dict[int, Homology] | None = None
            for w in widths_of(x, q):
                h = cache.get((w, bound))
                if h is None:
                    h = cache[(w, bound)] = dhat_homology(w, bound)
                acc = h if acc is None else _truncate(kunneth(acc, h), bound)
            for t, hom in (acc or {}).items():
                i = t + shift
                if 0 <= i < N and not hom.is_zero():
                    prev = out[i]
                    for _ in chis:
                        prev = Homology(prev.betti + hom.betti,
                                        tuple(sorted(prev.torsion + hom.torsion)))
                    out[i] = prev
    return out


def _truncate(h: dict[int, Homology], bound: int) -> dict[int, Homology]:
    return {d: v for d, v in h.items() if d <= bound}


def homology_direct(q: int, N: int) -> dict[int, Homology]:
    """H^i of the nerve of F_S(D[q]) for 0 <= i <= N-1 by Smith normal form."""
    c = nerve_complex(free_crossed(build_D(q, N)))
    return {i: c.homology(i) for i in range(0, N)}


def summand_homology(q: int, N: int) -> dict[tuple, dict[int, Homology]]:
    """Homology of each summand, computed on its own block of the nerve."""
    from ..linalg import SparseMatrix
    from .chain import ChainComplex
    fc = free_crossed(build_D(q, N))
    b = nerve(fc)
    blocks: dict[tuple, dict[int, list]] = {}
    for n in range(0, N + 1):
        for e in fc.basis[(n, 0)]:
            blocks.setdefault(l1_key(e.base, e.perm), {}).setdefault(n, []).append(e)
    pos = {n: {e: i for i, e in enumerate(fc.basis[(n, 0)])} for n in range(0, N + 1)}
    out = {}
    for key, basis in blocks.items():
        diff = {}
        for n in range(0, N):
            src, tgt = basis.get(n, []), basis.get(n + 1, [])
            tix = {pos[n + 1][e]: j for j, e in enumerate(tgt)}
            mat = b.d[(n, 0)]
            entries = [(tix[r], c, v) for c, e in enumerate(src)
                       for r, v in mat.cols[pos[n][e]].items()]
            diff[n] = SparseMatrix.from_entries(len(tgt), len(src), entries)
        cc = ChainComplex({n: basis.get(n, []) for n in range(0, N + 1)}, diff)
        out[key] = {i: cc.homology(i) for i in range(0, N)}
    return out
