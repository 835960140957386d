"""Exhaustive checks that pin the sign convention of the differential.

A convention survives when d^2 = 0 on every basis tree of a window, the
Leibniz rule holds for compositions of basis trees, and the brace suboperad
is closed under d.  Candidates are tested cheapest check first and dropped at
the first failure.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .brace import closure_defects
from .dg import Chain, Convention, DEFAULT, _DirectFaces, _d_terms, candidates, leibniz_defect, tree_type
from .enumerate import enumerate_basis, types_in_window
from .trees import Tree, TreeType


def d_squared(t: Tree, conv: Convention = DEFAULT) -> Chain:
    out = Chain()
    for u, c in _d_terms(t, conv, _DirectFaces):
        for v, e in _d_terms(u, conv, _DirectFaces):
            out.add(v, c * e)
    return out


def window_trees(n_max: int, K: int, L: int):
    for n in range(n_max + 1):
        for tt in types_in_window(n, K, L):
            yield from enumerate_basis(tt)


def d_squared_failures(n_max: int = 2, K: int = 3, L: int = 4, conv: Convention = DEFAULT,
                       first_only: bool = False) -> tuple[int, list[Tree]]:
    """Number of trees checked and the trees with d(d(t)) != 0."""
    bad, count = [], 0
    for t in window_trees(n_max, K, L):
        count += 1
        if d_squared(t, conv):
            bad.append(t)
            if first_only:
                break
    return count, bad


def _compositions(n_max: int, K: int, L: int):
    """Slots (a-type, i, b-type) with a, b and a o_i b all in the window."""
    for na in range(1, n_max + 1):
        for ksa in itertools.product(range(K + 1), repeat=na):
            if sum(ksa) > K:
                continue
            for la in range(L + 1):
                for i in range(1, na + 1):
                    lb = ksa[i - 1]
                    if lb > L:
                        continue
                    for nb in range(0, n_max - na + 2):
                        for ksb in itertools.product(range(K + 1), repeat=nb):
                            comp = ksa[:i - 1] + ksb + ksa[i:]
                            if sum(ksb) <= K and sum(comp) <= K:
                                yield TreeType(la, ksa), i, TreeType(lb, ksb)


def leibniz_pairs(n_max: int, K: int, L: int):
    for ta, i, tb in _compositions(n_max, K, L):
        bs = enumerate_basis(tb)
        for a in enumerate_basis(ta):
            for b in bs:
                yield a, i, b


def leibniz_failures(n_max: int = 2, K: int = 3, L: int = 2, conv: Convention = DEFAULT,
                     first_only: bool = False) -> tuple[int, list]:
    """Exhaustive Leibniz check over all composable pairs in the window."""
    bad, count = [], 0
    for a, i, b in leibniz_pairs(n_max, K, L):
        count += 1
        if leibniz_defect(a, i, b, conv):
            bad.append((a, i, b))
            if first_only:
                break
    return count, bad


def leibniz_sample(samples: int, seed: int, n_max: int = 2, K: int = 3, L: int = 4,
                   conv: Convention = DEFAULT) -> tuple[int, list]:
    """Seeded random composable pairs over the whole window."""
    rng = random.Random(seed)
    slots = list(_compositions(n_max, K, L))
    bad = []
    for _ in range(samples):
        ta, i, tb = rng.choice(slots)
        a = rng.choice(enumerate_basis(ta))
        b = rng.choice(enumerate_basis(tb))
        if leibniz_defect(a, i, b, conv):
            bad.append((a, i, b))
    return samples, bad


@dataclass
class Verdict:
    convention: Convention
    failed: str | None
    checked: dict[str, int] = field(default_factory=dict)

    @property
    def survives(self) -> bool:
        return self.failed is None

    def to_json(self) -> dict:
        return {"convention": self.convention.label(), "survives": self.survives,
                "failed": self.failed, "checked": self.checked}


def judge(conv: Convention, d2_window=(2, 3, 4), leibniz_window=(2, 3, 2),
          samples: int = 500, seed: int = 0, brace_L: int = 3) -> Verdict:
    v = Verdict(conv, None)
    for n in (2, 3):
        if closure_defects(n, brace_L, conv):
            v.failed = f"brace closure n={n}"
            return v
    v.checked["brace closure"] = 2
    count, bad = leibniz_failures(*leibniz_window, conv=conv, first_only=True)
    v.checked["leibniz"] = count
    if bad:
        v.failed = "leibniz"
        return v
    count, bad = leibniz_sample(samples, seed, *d2_window, conv=conv)
    v.checked["leibniz sample"] = count
    if bad:
        v.failed = "leibniz sample"
        return v
    count, bad = d_squared_failures(*d2_window, conv=conv, first_only=True)
    v.checked["d squared"] = count
    if bad:
        v.failed = "d squared"
    return v


def survey(**kw) -> list[Verdict]:
    return [judge(c, **kw) for c in candidates()]


def quick_failures(conv: Convention, n_max: int = 2, K: int = 2, L: int = 3) -> dict[str, bool]:
    """d^2 and Leibniz alone on a small window (no brace test)."""
    return {"d squared": not d_squared_failures(n_max, K, L, conv, True)[1],
            "leibniz": not leibniz_failures(n_max, K, min(L, 2), conv, True)[1]}


def type_of(t: Tree) -> TreeType:
    return tree_type(t)
