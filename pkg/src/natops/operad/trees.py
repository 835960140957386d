"""Planar trees with white, black and special vertices and labelled legs.

Nodes are nested tuples so that trees are hashable and compare structurally:

    ("L", p)              leg labelled p
    ("S",)                special vertex (unit, arity 0)
    ("W", j, children)    white vertex j
    ("B", children)       black vertex (iterated product, arity >= 2)

The canonical form is the planar tree itself; :func:`canonicalize` brings an
arbitrary grafting result into it by the rules
R1 black child of a black vertex is merged into it,
R2 special child of a black vertex is deleted,
R3 black vertex of arity 1 is replaced by its child,
R4 black vertex of arity 0 becomes special.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from ..perm import Perm

Tree = tuple

BAR: Tree = ("L", 1)
DOT: Tree = ("S",)


def leg(p: int) -> Tree:
    return ("L", p)


def special() -> Tree:
    return DOT


def white(j: int, *children: Tree) -> Tree:
    return ("W", j, tuple(children))


def black(*children: Tree) -> Tree:
    return ("B", tuple(children))


@dataclass(frozen=True, order=True)
class TreeType:
    l: int
    ks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ks", tuple(self.ks))
        if self.l < 0 or any(k < 0 for k in self.ks):
            raise ValueError(f"negative colour in {self}")

    @property
    def n(self) -> int:
        return len(self.ks)

    @property
    def degree(self) -> int:
        return self.l - sum(self.ks)

    def __str__(self) -> str:
        return f"({self.l};{','.join(map(str, self.ks))})"


def nodes(t: Tree) -> Iterator[Tree]:
    yield t
    if t[0] == "W":
        for c in t[2]:
            yield from nodes(c)
    elif t[0] == "B":
        for c in t[1]:
            yield from nodes(c)


def children(t: Tree) -> tuple:
    if t[0] == "W":
        return t[2]
    if t[0] == "B":
        return t[1]
    return ()


def legs(t: Tree) -> list[int]:
    """Leg labels in planar (counterclockwise) order."""
    return [x[1] for x in nodes(t) if x[0] == "L"]


def whites(t: Tree) -> dict[int, int]:
    """White label -> arity."""
    return {x[1]: len(x[2]) for x in nodes(t) if x[0] == "W"}


def tree_type(t: Tree) -> TreeType:
    ws = whites(t)
    return TreeType(len(legs(t)), tuple(ws[j] for j in sorted(ws)))


def validate(t: Tree, tt: TreeType | None = None) -> None:
    """Raise ValueError unless t is a canonical tree (of type tt)."""
    ws = whites(t)
    n = len(ws)
    if sorted(ws) != list(range(1, n + 1)):
        raise ValueError("white labels are not 1..n")
    ls = legs(t)
    if sorted(ls) != list(range(1, len(ls) + 1)):
        raise ValueError("leg labels are not 1..l")
    if t[0] == "S" and n:
        raise ValueError("special root in a tree with white vertices")
    if t[0] == "L" and n:
        raise ValueError("bare leg root in a tree with white vertices")
    for x in nodes(t):
        if x[0] == "B":
            if len(x[1]) < 2:
                raise ValueError("black vertex of arity < 2")
            for c in x[1]:
                if c[0] in ("B", "S"):
                    raise ValueError("black vertex adjacent to a black or special vertex")
        elif x[0] not in ("W", "L", "S"):
            raise ValueError(f"unknown node kind {x[0]!r}")
    if tt is not None and tree_type(t) != tt:
        raise ValueError(f"tree has type {tree_type(t)}, expected {tt}")


def canonicalize(t: Tree) -> Tree:
    kind = t[0]
    if kind == "W":
        return ("W", t[1], tuple(canonicalize(c) for c in t[2]))
    if kind == "B":
        kids = []
        for c in t[1]:
            c = canonicalize(c)
            if c[0] == "B":
                kids.extend(c[1])          # R1
            elif c[0] == "S":
                continue                    # R2
            else:
                kids.append(c)
        if not kids:
            return DOT                      # R4
        if len(kids) == 1:
            return kids[0]                  # R3
        return ("B", tuple(kids))
    return t


def _graft(t2: Tree, kids: Sequence[Tree], shift: int) -> Tree:
    kind = t2[0]
    if kind == "L":
        return kids[t2[1] - 1]
    if kind == "W":
        return ("W", t2[1] + shift, tuple(_graft(c, kids, shift) for c in t2[2]))
    if kind == "B":
        return ("B", tuple(_graft(c, kids, shift) for c in t2[1]))
    return t2


def insert(t1: Tree, i: int, t2: Tree) -> Tree:
    """t1 o_i t2: replace white vertex i of t1 by t2 and normalize."""
    n2 = len(whites(t2))
    l2 = len(legs(t2))
    found = []

    def walk(x: Tree) -> Tree:
        kind = x[0]
        if kind == "W":
            kids = tuple(walk(c) for c in x[2])
            j = x[1]
            if j == i:
                if len(kids) != l2:
                    raise ValueError(f"colour mismatch: slot {i} has arity {len(kids)}, "
                                     f"inserted tree has {l2} legs")
                found.append(True)
                return _graft(t2, kids, i - 1)
            return ("W", j + n2 - 1 if j > i else j, kids)
        if kind == "B":
            return ("B", tuple(walk(c) for c in x[1]))
        return x

    out = walk(t1)
    if not found:
        raise ValueError(f"no white vertex {i}")
    return canonicalize(out)


def relabel_whites(t: Tree, mapping: dict[int, int]) -> Tree:
    kind = t[0]
    if kind == "W":
        return ("W", mapping[t[1]], tuple(relabel_whites(c, mapping) for c in t[2]))
    if kind == "B":
        return ("B", tuple(relabel_whites(c, mapping) for c in t[1]))
    return t


def relabel_legs(t: Tree, mapping) -> Tree:
    kind = t[0]
    if kind == "L":
        return ("L", mapping[t[1]])
    if kind == "W":
        return ("W", t[1], tuple(relabel_legs(c, mapping) for c in t[2]))
    if kind == "B":
        return ("B", tuple(relabel_legs(c, mapping) for c in t[1]))
    return t


def sym_act(t: Tree, sigma: Perm) -> Tree:
    """Relabel white vertex j as sigma(j)."""
    n = len(whites(t))
    if sigma.q != n:
        raise ValueError(f"permutation of {sigma.q} letters on a tree with {n} whites")
    return relabel_whites(t, {j: sigma(j) for j in range(1, n + 1)})


def count_vertices(t: Tree) -> int:
    return sum(1 for x in nodes(t) if x[0] in ("W", "B", "S"))


def has_stub(t: Tree) -> bool:
    return any(x[0] == "S" for x in nodes(t))


def to_json(t: Tree) -> dict:
    kind = t[0]
    if kind == "L":
        return {"kind": "leg", "label": t[1], "children": []}
    if kind == "S":
        return {"kind": "special", "children": []}
    if kind == "W":
        return {"kind": "white", "label": t[1], "children": [to_json(c) for c in t[2]]}
    return {"kind": "black", "children": [to_json(c) for c in t[1]]}


def from_json(obj: dict) -> Tree:
    kind = obj["kind"]
    kids = tuple(from_json(c) for c in obj.get("children", []))
    if kind == "leg":
        return ("L", int(obj["label"]))
    if kind == "special":
        return DOT
    if kind == "white":
        return ("W", int(obj["label"]), kids)
    if kind == "black":
        return ("B", kids)
    raise ValueError(f"unknown node kind {kind!r}")


def show(t: Tree) -> str:
    """Compact text form, e.g. B(3,W1(W2(B(5,6),*,8),1,W3(7)),W4(4,*,2))."""
    kind = t[0]
    if kind == "L":
        return str(t[1])
    if kind == "S":
        return "*"
    if kind == "W":
        return f"W{t[1]}(" + ",".join(show(c) for c in t[2]) + ")"
    return "B(" + ",".join(show(c) for c in t[1]) + ")"
