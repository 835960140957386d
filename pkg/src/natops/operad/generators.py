"""Trees of distinguished operations: O_g for interval maps, cup products, braces."""

from __future__ import annotations

import itertools
from functools import lru_cache

from ..interval import IntervalMorphism, codegeneracy_generator, coface_generator
from .sums import TreeSum
from .trees import DOT, Tree, TreeType, canonicalize


def _block(points) -> Tree:
    """Black vertex over the legs of a fiber (labels are points + 1)."""
    ls = [("L", x + 1) for x in points]
    if not ls:
        return DOT
    if len(ls) == 1:
        return ls[0]
    return ("B", tuple(ls))


def realize_interval(g: IntervalMorphism) -> Tree:
    """The one-white-vertex tree of O_g for g : <l-1> -> <k-1>.

    O_g(f)(a_0..a_{l-1}) = abar_{-1} f(abar_0..abar_{k-1}) abar_k, where abar_i
    multiplies the a_x over the fiber of i in fiber order and is 1 on an
    empty fiber; the endpoints -1 and l are dropped from the outer fibers.
    """
    k = g.dst + 1
    left = [x for x in g.fiber(-1) if x != -1]
    right = [x for x in g.fiber(k) if x != g.src + 1]
    w = ("W", 1, tuple(_block(g.fiber(i)) for i in range(k)))
    root = ("B", tuple(("L", x + 1) for x in left) + (w,) + tuple(("L", x + 1) for x in right))
    return canonicalize(root)


@lru_cache(maxsize=None)
def generator_coface(l: int, i: int) -> Tree:
    """Tree in B^{l+1}_l of the Hochschild face d_i, 0 <= i <= l+1."""
    if l < 0 or not 0 <= i <= l + 1:
        raise ValueError(f"coface index {i} out of range for l={l}")
    return realize_interval(coface_generator(l + 1, i))


@lru_cache(maxsize=None)
def generator_codegeneracy(k: int, i: int) -> Tree:
    """Tree in B^k_{k+1}: a stub at slot i+1 of the white vertex, 0 <= i <= k."""
    if k < 0 or not 0 <= i <= k:
        raise ValueError(f"codegeneracy index {i} out of range for k={k}")
    return realize_interval(codegeneracy_generator(k, i))


def identity_tree(k: int) -> Tree:
    """The identity operation on C^k."""
    return ("W", 1, tuple(("L", p) for p in range(1, k + 1)))


def cup_generator(k: int, l: int) -> Tree:
    """(f u g)(a_1..a_{k+l}) = f(a_1..a_k) g(a_{k+1}..a_{k+l})."""
    f = ("W", 1, tuple(("L", p) for p in range(1, k + 1)))
    g = ("W", 2, tuple(("L", p) for p in range(k + 1, k + l + 1)))
    return ("B", (f, g))


def brace_terms(k: int, ms: tuple[int, ...]) -> list[tuple[int, Tree]]:
    """Signed substitutions f(id.., g_2, id.., g_n, id..) for f{g_2..g_n}."""
    ms = tuple(ms)
    r = len(ms)
    out = []
    for slots in itertools.combinations(range(k), r):
        kids, label, eps, j = [], 1, 0, 0
        for s in range(k):
            if j < r and slots[j] == s:
                m = ms[j]
                eps += (m - 1) * (label - 1)
                kids.append(("W", j + 2, tuple(("L", label + x) for x in range(m))))
                label += m
                j += 1
            else:
                kids.append(("L", label))
                label += 1
        out.append((-1 if eps % 2 else 1, ("W", 1, tuple(kids))))
    return out


def brace_generator(k: int, ms) -> TreeSum:
    ms = tuple(ms)
    tt = TreeType(k - len(ms) + sum(ms), (k,) + ms)
    s = TreeSum(tt)
    for c, t in brace_terms(k, ms):
        s.add(t, c)
    return s
