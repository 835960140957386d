"""Enumeration of all canonical trees of a given type."""

from __future__ import annotations

import itertools
from functools import lru_cache

from .trees import Tree, TreeType

HOLE = ("L", 0)


def _shapes(ks: tuple[int, ...], ws: frozenset, nlegs: int, parent: str) -> list[Tree]:
    return list(_shapes_cached(ks, ws, nlegs, parent))


@lru_cache(maxsize=None)
def _shapes_cached(ks, ws, nlegs, parent) -> tuple:
    """Planar shapes with unlabelled legs using exactly the whites ws and nlegs legs.

    parent is 'root', 'W' or 'B' and restricts the admissible node kinds.
    """
    out = []
    if not ws:
        if nlegs == 1:
            out.append(HOLE)
        if nlegs == 0 and parent in ("W", "root"):
            out.append(("S",))
    for j in sorted(ws):
        rest = ws - {j}
        for kids in _sequences(ks, rest, nlegs, ks[j - 1], "W"):
            out.append(("W", j, kids))
    if parent != "B":
        for count in range(2, len(ws) + nlegs + 1):
            for kids in _sequences(ks, ws, nlegs, count, "B"):
                out.append(("B", kids))
    return tuple(out)


@lru_cache(maxsize=None)
def _sequences(ks, ws: frozenset, nlegs: int, count: int, parent: str) -> tuple:
    """Ordered child lists of given length distributing ws and nlegs."""
    if count == 0:
        return ((),) if not ws and nlegs == 0 else ()
    out = []
    wl = sorted(ws)
    for r in range(len(wl) + 1):
        for first in itertools.combinations(wl, r):
            fs = frozenset(first)
            rest = ws - fs
            for a in range(nlegs + 1):
                heads = _shapes_cached(ks, fs, a, parent)
                if not heads:
                    continue
                tails = _sequences(ks, rest, nlegs - a, count - 1, parent)
                for h in heads:
                    for tl in tails:
                        out.append((h,) + tl)
    return tuple(out)


def _fill(t: Tree, labels, pos: list[int]) -> Tree:
    kind = t[0]
    if kind == "L":
        p = labels[pos[0]]
        pos[0] += 1
        return ("L", p)
    if kind == "W":
        return ("W", t[1], tuple(_fill(c, labels, pos) for c in t[2]))
    if kind == "B":
        return ("B", tuple(_fill(c, labels, pos) for c in t[1]))
    return t


def planar_shapes(tt: TreeType) -> list[Tree]:
    """Trees of the type with legs labelled 1..l counterclockwise."""
    ident = tuple(range(1, tt.l + 1))
    shapes = _shapes(tt.ks, frozenset(range(1, tt.n + 1)), tt.l, "root")
    return sorted(_fill(s, ident, [0]) for s in shapes)


def enumerate_basis(tt: TreeType) -> list[Tree]:
    return list(_basis_cached(tt))


@lru_cache(maxsize=64)
def _basis_cached(tt: TreeType) -> tuple:
    shapes = _shapes(tt.ks, frozenset(range(1, tt.n + 1)), tt.l, "root")
    out = []
    for s in shapes:
        for labels in itertools.permutations(range(1, tt.l + 1)):
            out.append(_fill(s, labels, [0]))
    return tuple(sorted(out))


def count_basis(tt: TreeType) -> int:
    shapes = _shapes(tt.ks, frozenset(range(1, tt.n + 1)), tt.l, "root")
    f = 1
    for i in range(2, tt.l + 1):
        f *= i
    return len(shapes) * f


def types_in_window(n: int, K: int, L: int) -> list[TreeType]:
    """All types (l; k_1..k_n) with sum k <= K and l <= L."""
    out = []
    for ks in itertools.product(range(K + 1), repeat=n):
        if sum(ks) <= K:
            for l in range(L + 1):
                out.append(TreeType(l, ks))
    return sorted(out)
