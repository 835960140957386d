"""Verification suites: each returns a list of named checks with a verdict.

The suites are the executable form of the identities and homology claims the
library reproduces; the command line and the acceptance tests both drive
them from here.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from . import interval as I
from . import perm as P
from .complexes import decomposition as DEC
from .complexes.chain import Homology, totalize
from .complexes.cosimplicial import (build_D, build_Dhat, check_cosimplicial_identities, free_crossed,
                                     iota_matrix, miraculous_matrix, nerve, nerve_complex,
                                     random_cosimplicial, stable_window)
from .hochschild import build_l9_witness, evaluate, generators, genericity_check, coefficient
from .linalg import SparseMatrix
from .operad import trees as T
from .operad.brace import span_complex
from .operad.certify import judge, leibniz_sample
from .operad.dg import DEFAULT, candidates
from .operad.enumerate import count_basis, enumerate_basis, types_in_window
from .operad.generators import realize_interval
from .operad.trees import TreeType
from .operad.truncation import bhat_zero_homology, row_homology, truncated_complex


@dataclass
class Check:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def _ok(checks: list[Check]) -> bool:
    return all(c.passed for c in checks)


# -- permutations and the crossed interval group ----------------------------

def sign_identity(qmax: int = 6) -> Check:
    """(-1)^{sigma-bar(i)} sgn(sigma) = (-1)^i sgn(d_i sigma)."""
    bad, count = [], 0
    for q in range(qmax + 1):
        for s in P.all_perms(q):
            for i in range(q + 2):
                count += 1
                lhs = (-1) ** P.bar_index(s, i) * P.sign(s)
                if lhs != (-1) ** i * P.sign(P.coface(s, i)):
                    bad.append([s.to_json(), i])
    return Check("sign identity", not bad, {"cases": count, "failures": bad[:5]})


def miraculous_checks(qmax: int = 3, N: int = 4) -> list[Check]:
    """m is a cochain map on the nerve, and m o N(iota) = id."""
    chain_ok, retract_ok = True, True
    for q in range(qmax + 1):
        c = build_D(q, N)
        fc = free_crossed(c)
        bc, bf = nerve(c), nerve(fc)
        for n in range(N):
            m0 = miraculous_matrix(fc, c, n, 0)
            m1 = miraculous_matrix(fc, c, n + 1, 0)
            if m1 @ bf.d[(n, 0)] != bc.d[(n, 0)] @ m0:
                chain_ok = False
        for n in range(N + 1):
            prod = miraculous_matrix(fc, c, n, 0) @ iota_matrix(c, fc, n, 0)
            dim = len(c.basis[(n, 0)])
            if prod != SparseMatrix.from_entries(dim, dim, [(i, i, 1) for i in range(dim)]):
                retract_ok = False
    return [Check("miraculous map is a cochain map", chain_ok, {"q": qmax, "N": N}),
            Check("m o N(iota) = id", retract_ok, {"q": qmax, "N": N})]


def suite_p44(qmax: int = 6) -> list[Check]:
    return [sign_identity(qmax)] + miraculous_checks()


def crossed_relations(nmax: int = 4) -> list[Check]:
    """The relations on the groups and the two commuting squares."""
    pc = P.compose
    rel_d = rel_s = sq_d = sq_s = True
    cases = 0
    for n in range(nmax + 1):
        perms = list(P.all_perms(n))
        for h in perms:
            for h2 in perms:
                prod = pc(h2, h)
                for i in range(n + 2):
                    cases += 1
                    if P.coface(prod, i) != pc(P.coface(h2, P.bar_index(h, i)), P.coface(h, i)):
                        rel_d = False
                for i in range(n):
                    cases += 1
                    if P.codegeneracy(prod, i) != pc(P.codegeneracy(h2, P.under_index(h, i)),
                                                     P.codegeneracy(h, i)):
                        rel_s = False
            if n >= 1:
                for i in range(n + 2):
                    lhs = I.compose(I.automorphism(h), I.coface_generator(n + 1, P.bar_index(h, i)))
                    rhs = I.compose(I.coface_generator(n + 1, i), I.automorphism(P.coface(h, i)))
                    sq_d &= lhs == rhs
                for i in range(n):
                    lhs = I.compose(I.automorphism(h), I.codegeneracy_generator(n - 1, P.under_index(h, i)))
                    rhs = I.compose(I.codegeneracy_generator(n - 1, i), I.automorphism(P.codegeneracy(h, i)))
                    sq_s &= lhs == rhs
    return [Check("coface relation d_i(hh') = d_hbar(i)(h') d_i(h)", rel_d, {"cases": cases}),
            Check("codegeneracy relation s_i(hh') = s_hunder(i)(h') s_i(h)", rel_s, {}),
            Check("coface square commutes", sq_d, {}),
            Check("codegeneracy square commutes", sq_s, {})]


def free_crossed_identities(qmax: int = 3, N: int = 4) -> Check:
    bad = {}
    for q in range(qmax + 1):
        errs = check_cosimplicial_identities(free_crossed(build_D(q, N)))
        if errs:
            bad[q] = errs[:3]
    return Check("F_S(D[q]) is cosimplicial", not bad, {"failures": bad})


def suite_crossed(nmax: int = 4) -> list[Check]:
    return crossed_relations(nmax) + [free_crossed_identities()]


# -- models and the splitting -----------------------------------------------

def suite_p22(qmax: int = 3, N: int = 6) -> list[Check]:
    """H^{>=1} of N(F_S(D[q])) vanishes, computed directly and via the splitting."""
    out = []
    for q in range(qmax + 1):
        direct = DEC.homology_direct(q, N)
        split = DEC.homology_via_l1(q, N)
        acyclic = all(h.is_zero() for i, h in direct.items() if i >= 1)
        out.append(Check(f"acyclicity q={q}", acyclic and direct[0] == Homology(1) and direct == split,
                         {"direct": {i: h.to_json() for i, h in direct.items()},
                          "agree": direct == split}))
    for q in range(min(qmax, 4) + 1):
        c = nerve_complex(build_Dhat(q, N))
        hs = {i: c.homology(i) for i in range(-1, N)}
        out.append(Check(f"Dhat[{q}] acyclic", all(h.is_zero() for h in hs.values()), {}))
    return out


def suite_l1(qmax: int = 3, nmax: int = 6) -> list[Check]:
    out = []
    for q in range(qmax + 1):
        for n in range(nmax + 1):
            lhs = len(list(itertools.combinations_with_replacement(range(q + 1), n + 1))) * \
                len(list(P.all_perms(n)))
            ranks = DEC.l1_decompose(q, n)
            pred = DEC.summand_ranks_predicted(q, n)
            ok = lhs == DEC.rhs_dimension(q, n) == sum(ranks.values()) and ranks == pred
            out.append(Check(f"rank identity q={q} n={n}", ok, {"dim": lhs}))
    return out


def _total_homology(c, window):
    tot = totalize(nerve(c), window)
    return {m: tot.homology(m) for m in range(window[0], window[1] + 1)}


def suite_t2(seed: int = 0, randoms: int = 20, N: int = 5) -> list[Check]:
    rng = random.Random(seed)
    samples = [(f"D[{q}]", build_D(q, N)) for q in range(3)]
    samples += [(f"random#{j}", random_cosimplicial(rng, N)) for j in range(randoms)]
    out = []
    for name, c in samples:
        lo, hi = stable_window(c)
        lo = max(lo, 0)
        a = _total_homology(c, (lo, hi))
        b = _total_homology(free_crossed(c), (lo, hi))
        out.append(Check(f"t2 {name}", a == b, {"window": [lo, hi],
                                               "homology": {m: h.to_json() for m, h in a.items()}}))
    return out


# -- trees, generic algebra, underlying category ------------------------------

WORKED_TREE = T.black(T.leg(3),
                    T.white(1, T.white(2, T.black(T.leg(5), T.leg(6)), T.DOT, T.leg(8)),
                            T.leg(1), T.white(3, T.leg(7))),
                    T.white(4, T.leg(4), T.DOT, T.leg(2)))


def suite_l9(n_max: int = 2, K: int = 3, L: int = 3) -> list[Check]:
    failing = [str(tt) for n in range(n_max + 1) for tt in types_in_window(n, K, L)
               if not genericity_check(tt)]
    w = build_l9_witness(WORKED_TREE)
    val = evaluate(WORKED_TREE, w.cochains, generators(8))
    fig = w.target == (3, 9, 12) and coefficient(val, w.target) == 1 and len(val.terms) == 1
    return [Check("genericity sweep", not failing, {"failing": failing}),
            Check("worked example", fig, {"target": list(w.target), "value": repr(val)})]


def _generators_into(src: int, top: int):
    """Cofaces, codegeneracies and adjacent transpositions out of <src>."""
    out = []
    if src >= 0:
        for i in range(src + 2):
            if src - 1 >= -1:
                out.append(I.coface_generator(src + 1, i))
    if src + 1 <= top:
        for i in range(src + 2):
            out.append(I.codegeneracy_generator(src + 1, i))
    for s in range(1, src + 1):
        images = list(range(1, src + 2))
        images[s - 1], images[s] = images[s], images[s - 1]
        out.append(I.automorphism(P.Perm(tuple(images))))
    return out


def suite_span(top: int = 3, pair_top: int = 2) -> list[Check]:
    """Span(IS(<l-1>,<k-1>)) = B^l_k and functoriality of g -> O_g."""
    card = inj = True
    for l in range(top + 2):
        for k in range(top + 2):
            homs = list(I.hom(l - 1, k - 1))
            trees = [realize_interval(g) for g in homs]
            basis = enumerate_basis(TreeType(l, (k,)))
            card &= len(homs) == count_basis(TreeType(l, (k,)))
            inj &= len(set(trees)) == len(trees) and set(trees) == set(basis)
    functor_gen = True
    cases = 0
    for a in range(-1, top + 1):
        for b in range(-1, top + 1):
            for g in I.hom(a, b):
                og = realize_interval(g)
                for h in _generators_into(a, top):
                    if h.dst != a:
                        continue
                    cases += 1
                    if realize_interval(I.compose(g, h)) != T.insert(realize_interval(h), 1, og):
                        functor_gen = False
    functor_all = True
    for a, b, c in itertools.product(range(-1, pair_top + 1), repeat=3):
        homs_ab = list(I.hom(a, b))
        for h in I.hom(c, a):
            oh = realize_interval(h)
            for g in homs_ab:
                if realize_interval(I.compose(g, h)) != T.insert(oh, 1, realize_interval(g)):
                    functor_all = False
    return [Check("cardinalities", card, {"l,k <=": top + 1}),
            Check("realization is a bijection onto the basis", inj, {}),
            Check("O_(g o h) = O_g o O_h on generators h", functor_gen, {"cases": cases}),
            Check("O_(g o h) = O_g o O_h on all pairs", functor_all, {"intervals <=": pair_top})]


# -- the dg operad --------------------------------------------------------------

def suite_convention(samples: int = 500, seed: int = 0, full: bool = True) -> list[Check]:
    verdicts = [judge(c, samples=samples, seed=seed,
                      d2_window=(2, 3, 4) if full else (2, 2, 3),
                      leibniz_window=(2, 3, 2) if full else (2, 2, 2)) for c in candidates()]
    survivors = [v.convention.label() for v in verdicts if v.survives]
    count, bad = leibniz_sample(10 * samples, seed + 1) if full else (0, [])
    return [Check("chosen convention passes", verdicts[candidates().index(DEFAULT)].survives,
                  {"verdicts": [v.to_json() for v in verdicts]}),
            Check("unique survivor", survivors == [DEFAULT.label()], {"survivors": survivors}),
            Check("Leibniz on a wider sample over the full window", not bad,
                  {"pairs": count, "seed": seed + 1,
                   "counterexamples": [[T.to_json(a), i, T.to_json(b)] for a, i, b in bad[:3]]})]


def suite_rows(L: int = 5, kmax: int = 3, sizes=(3, 4)) -> list[Check]:
    out = []
    for k in range(kmax + 1):
        hs = row_homology((k,), L)
        out.append(Check(f"row k={k} acyclic", all(h.is_zero() for h in hs.values()),
                         {"degrees": sorted(hs)}))
    h0 = []
    for Lq in sizes:
        c = truncated_complex(1, Lq + 1, Lq)
        h0.append(c.complex.homology(0))
    out.append(Check("H^0 of B(1) has rank 1 and is stable",
                     all(h == Homology(1) for h in h0), {"H0": [h.to_json() for h in h0],
                                                         "L": list(sizes)}))
    return out


def suite_homotopy(sizes=(3, 4), L0: int = 6) -> list[Check]:
    expect = {2: {0: 1, -1: 1}, 3: {0: 1, -1: 3, -2: 2}}
    out = []
    for n, ranks in expect.items():
        got = []
        for L in sizes:
            sc = span_complex(n, L)
            got.append((sc.closed, sc.ranks(), {d: h.torsion for d, h in sc.homology().items()}))
        ok = all(c and r == ranks and not any(t.values()) for c, r, t in got)
        out.append(Check(f"Br-hat({n}) homology", ok,
                         {"ranks": [{str(d): v for d, v in r.items()} for _, r, _ in got],
                          "L": list(sizes)}))
    hb = bhat_zero_homology(L0)
    out.append(Check("Bhat(0) acyclic", all(h.is_zero() for h in hb.values()),
                     {"degrees": sorted(hb)}))
    return out


SUITES = {
    "p44": suite_p44,
    "crossed": suite_crossed,
    "convention": suite_convention,
    "p22": suite_p22,
    "l1": suite_l1,
    "t2": suite_t2,
    "l9": suite_l9,
    "span": suite_span,
    "rows": suite_rows,
    "homotopy": suite_homotopy,
}


def run_suite(name: str, seed: int = 0) -> list[Check]:
    if name not in SUITES:
        raise KeyError(name)
    fn = SUITES[name]
    if name in ("t2", "convention"):
        return fn(seed=seed)
    return fn()


def report(name: str, checks: list[Check], seed: int) -> dict:
    return {"suite": name, "seed": seed, "passed": _ok(checks),
            "checks": [c.to_json() for c in checks]}
