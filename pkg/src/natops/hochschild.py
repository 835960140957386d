"""Symbolic Hochschild cochains on the free algebra U = T(x_1, x_2, ...).

Monomials are tuples of generator indices (the empty tuple is the unit).
Cochains are finite tables with an implicit zero default, or any callable
taking a list of AlgebraElements; trees are evaluated by decorating white
vertices with cochains, black vertices with products and special vertices
with the unit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Sequence, Union

from .interval import IntervalMorphism
from .operad import trees as T
from .operad.enumerate import enumerate_basis
from .operad.sums import TreeSum
from .operad.trees import Tree, TreeType

Monomial = tuple


def monomial(*indices: int) -> Monomial:
    if any(i < 1 for i in indices):
        raise ValueError("generator indices start at 1")
    return tuple(indices)


class AlgebraElement:
    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, int] | None = None):
        self.terms = {tuple(m): c for m, c in (terms or {}).items() if c}

    @classmethod
    def gen(cls, i: int) -> "AlgebraElement":
        return cls({(i,): 1})

    @classmethod
    def mono(cls, m: Monomial, c: int = 1) -> "AlgebraElement":
        return cls({tuple(m): c})

    @classmethod
    def one(cls) -> "AlgebraElement":
        return cls({(): 1})

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return AlgebraElement(out)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + other.scale(-1)

    def scale(self, s: int) -> "AlgebraElement":
        return AlgebraElement({m: s * c for m, c in self.terms.items()})

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 + m2
                out[m] = out.get(m, 0) + c1 * c2
        return AlgebraElement(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraElement) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items()):
            w = "".join(f"x{i}" for i in m) or "1"
            parts.append(w if c == 1 else f"{c}*{w}")
        return " + ".join(parts)

    def to_json(self) -> list:
        return [[list(m), c] for m, c in sorted(self.terms.items())]


def coefficient(e: AlgebraElement, h: Monomial) -> int:
    return e.terms.get(tuple(h), 0)


def product(elems: Sequence[AlgebraElement]) -> AlgebraElement:
    out = AlgebraElement.one()
    for e in elems:
        out = out * e
    return out


@dataclass
class SymbolicCochain:
    arity: int
    table: dict[tuple[Monomial, ...], AlgebraElement] = field(default_factory=dict)

    def __post_init__(self):
        for key in self.table:
            if len(key) != self.arity:
                raise ValueError(f"table key {key} is not a {self.arity}-tuple")

    def at(self, monos: tuple[Monomial, ...]) -> AlgebraElement:
        return self.table.get(tuple(monos), AlgebraElement())

    def __call__(self, args: Sequence[AlgebraElement]) -> AlgebraElement:
        if len(args) != self.arity:
            raise ValueError(f"cochain of arity {self.arity} given {len(args)} arguments")
        out: dict[Monomial, int] = {}
        for combo in itertools.product(*(a.terms.items() for a in args)):
            c = 1
            for _, x in combo:
                c *= x
            val = self.table.get(tuple(m for m, _ in combo))
            if val is not None:
                for m, y in val.terms.items():
                    out[m] = out.get(m, 0) + c * y
        return AlgebraElement(out)

    def to_json(self) -> list:
        return [{"args": [list(m) for m in key], "value": v.to_json()}
                for key, v in sorted(self.table.items())]


Cochain = Union[SymbolicCochain, Callable[[Sequence[AlgebraElement]], AlgebraElement]]


def _eval(t: Tree, fs: Sequence[Cochain], args: Sequence[AlgebraElement]) -> AlgebraElement:
    kind = t[0]
    if kind == "L":
        return args[t[1] - 1]
    if kind == "S":
        return AlgebraElement.one()
    if kind == "B":
        return product([_eval(c, fs, args) for c in t[1]])
    vals = [_eval(c, fs, args) for c in t[2]]
    return fs[t[1] - 1](vals)


def evaluate(t: Tree | TreeSum, fs: Sequence[Cochain], args: Sequence[AlgebraElement]) -> AlgebraElement:
    if isinstance(t, TreeSum):
        out = AlgebraElement()
        for tree, c in t.items():
            out = out + evaluate(tree, fs, args).scale(c)
        return out
    tt = T.tree_type(t)
    if len(args) != tt.l:
        raise ValueError(f"tree has {tt.l} legs, got {len(args)} arguments")
    if len(fs) != tt.n:
        raise ValueError(f"tree has {tt.n} white vertices, got {len(fs)} cochains")
    for j, k in enumerate(tt.ks):
        ar = getattr(fs[j], "arity", k)
        if ar != k:
            raise ValueError(f"white vertex {j + 1} has arity {k}, cochain has arity {ar}")
    return _eval(t, fs, args)


def generators(l: int) -> list[AlgebraElement]:
    return [AlgebraElement.gen(i) for i in range(1, l + 1)]


@dataclass
class L9Witness:
    cochains: list[SymbolicCochain]
    target: Monomial
    values: dict[int, int]

    def value_of(self, i: int) -> int:
        return self.values[i]

    def to_json(self) -> dict:
        return {"values": {str(i): v for i, v in sorted(self.values.items())},
                "table": [f.to_json() for f in self.cochains],
                "target": list(self.target)}


def _keys(t: Tree, l: int) -> tuple[Monomial, dict[int, tuple[Monomial, ...]]]:
    """Monomial of t with function symbols replaced by their values, and the
    argument monomials seen by each white vertex."""
    keys: dict[int, tuple[Monomial, ...]] = {}

    def walk(x: Tree) -> Monomial:
        kind = x[0]
        if kind == "L":
            return (x[1],)
        if kind == "S":
            return ()
        if kind == "B":
            out: Monomial = ()
            for c in x[1]:
                out += walk(c)
            return out
        keys[x[1]] = tuple(walk(c) for c in x[2])
        return (l + x[1],)

    return walk(t), keys


def build_l9_witness(t: Tree) -> L9Witness:
    """Cochains f_i with single-point support and the target monomial h^T.

    f_i takes the value x_{l+i} exactly at the arguments it meets when every
    white vertex below it is replaced by its value.
    """
    tt = T.tree_type(t)
    target, keys = _keys(t, tt.l)
    values = {j: tt.l + j for j in range(1, tt.n + 1)}
    fs = [SymbolicCochain(tt.ks[j - 1], {keys[j]: AlgebraElement.gen(values[j])})
          for j in range(1, tt.n + 1)]
    return L9Witness(fs, target, values)


def kronecker_entry(s: Tree, w: L9Witness, l: int) -> int:
    return coefficient(evaluate(s, w.cochains, generators(l)), w.target)


def genericity_matrix(basis: list[Tree], l: int) -> list[list[int]]:
    ws = [build_l9_witness(t) for t in basis]
    args = generators(l)
    return [[coefficient(_eval(s, w.cochains, args), w.target) for w in ws] for s in basis]


def _eval_mono(t: Tree, keys: dict, vals: dict):
    """Evaluation on the generators x_1..x_l against single-point tables.

    Every intermediate value is a single monomial or zero (None), so this is
    evaluate() specialized to witness cochains, with early exit on zero.
    """
    kind = t[0]
    if kind == "L":
        return (t[1],)
    if kind == "S":
        return ()
    if kind == "B":
        out = ()
        for c in t[1]:
            v = _eval_mono(c, keys, vals)
            if v is None:
                return None
            out += v
        return out
    args = []
    for c in t[2]:
        v = _eval_mono(c, keys, vals)
        if v is None:
            return None
        args.append(v)
    j = t[1]
    return vals[j] if tuple(args) == keys[j] else None


def witness_entry(s: Tree, w: L9Witness) -> int:
    """O_S(f^T)(x_1..x_l)|_{h^T} via the fast path."""
    keys, vals = _pack(w)
    return int(_eval_mono(s, keys, vals) == tuple(w.target))


def _pack(w: L9Witness) -> tuple[dict, dict]:
    keys = {j + 1: next(iter(f.table)) for j, f in enumerate(w.cochains)}
    vals = {j: (v,) for j, v in w.values.items()}
    return keys, vals


def genericity_check(tt: TreeType, basis: list[Tree] | None = None, fast: bool = True) -> bool:
    """True iff O_S(f^T)(x_1..x_l)|_{h^T} is the Kronecker delta on the basis."""
    basis = enumerate_basis(tt) if basis is None else basis
    ws = [build_l9_witness(t) for t in basis]
    if fast:
        packed = [_pack(w) + (tuple(w.target),) for w in ws]
        for a, s in enumerate(basis):
            for b, (keys, vals, target) in enumerate(packed):
                if (_eval_mono(s, keys, vals) == target) != (a == b):
                    return False
        return True
    args = generators(tt.l)
    for a, s in enumerate(basis):
        for b, w in enumerate(ws):
            if coefficient(_eval(s, w.cochains, args), w.target) != (a == b):
                return False
    return True


def hochschild_coboundary(f: Cochain, k: int, sign: str = "plain") -> Callable:
    """(df)(a_1..a_{k+1}) = sum_i e_i d_i f with e_i = (-1)^i, or (-1)^{i+k}
    for the nerve convention."""
    def df(args: Sequence[AlgebraElement]) -> AlgebraElement:
        if len(args) != k + 1:
            raise ValueError("arity mismatch")
        out = AlgebraElement()
        for i in range(k + 2):
            if i == 0:
                term = args[0] * f(list(args[1:]))
            elif i == k + 1:
                term = f(list(args[:k])) * args[k]
            else:
                merged = list(args[:i - 1]) + [args[i - 1] * args[i]] + list(args[i + 1:])
                term = f(merged)
            e = i + (k if sign == "nerve" else 0)
            out = out + (term.scale(-1) if e % 2 else term)
        return out
    df.arity = k + 1
    return df


def bar_action(g: IntervalMorphism, tensor: Sequence[AlgebraElement]) -> list[AlgebraElement]:
    """abar_i = product of a_j over the ordered fiber of i, 1 on empty fibers."""
    if len(tensor) != g.src + 3:
        raise ValueError(f"expected {g.src + 3} tensor factors, got {len(tensor)}")
    return [product([tensor[x + 1] for x in g.fiber(i)]) for i in range(-1, g.dst + 2)]
