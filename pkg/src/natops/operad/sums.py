"""Integer linear combinations of trees of one type."""

from __future__ import annotations

from typing import Iterable

from . import trees as T
from .trees import Tree, TreeType


class TreeSum:
    __slots__ = ("tt", "terms")

    def __init__(self, tt: TreeType, terms: dict[Tree, int] | None = None):
        self.tt = tt
        self.terms = {t: c for t, c in (terms or {}).items() if c}

    @classmethod
    def of(cls, t: Tree, coeff: int = 1) -> "TreeSum":
        return cls(T.tree_type(t), {t: coeff})

    @classmethod
    def zero(cls, tt: TreeType) -> "TreeSum":
        return cls(tt)

    def add(self, t: Tree, c: int) -> None:
        if not c:
            return
        v = self.terms.get(t, 0) + c
        if v:
            self.terms[t] = v
        else:
            del self.terms[t]

    def __add__(self, other: "TreeSum") -> "TreeSum":
        self._check(other)
        out = TreeSum(self.tt, self.terms)
        for t, c in other.terms.items():
            out.add(t, c)
        return out

    def __sub__(self, other: "TreeSum") -> "TreeSum":
        return self + other.scale(-1)

    def __neg__(self) -> "TreeSum":
        return self.scale(-1)

    def scale(self, s: int) -> "TreeSum":
        return TreeSum(self.tt, {t: s * c for t, c in self.terms.items()})

    def _check(self, other: "TreeSum") -> None:
        if self.tt != other.tt:
            raise ValueError(f"type mismatch {self.tt} vs {other.tt}")

    def __eq__(self, other) -> bool:
        return isinstance(other, TreeSum) and self.tt == other.tt and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def items(self) -> Iterable[tuple[Tree, int]]:
        return self.terms.items()

    def to_json(self) -> list[dict]:
        return [{"coeff": c, "tree": T.to_json(t)} for t, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, obj: list[dict], tt: TreeType | None = None) -> "TreeSum":
        terms: dict[Tree, int] = {}
        for item in obj:
            t = T.from_json(item["tree"])
            terms[t] = terms.get(t, 0) + int(item["coeff"])
        if tt is None:
            if not terms:
                raise ValueError("cannot infer the type of an empty sum")
            tt = T.tree_type(next(iter(terms)))
        return cls(tt, terms)

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*{T.show(t)}" for t, c in sorted(self.terms.items()))
        return f"TreeSum{self.tt}[{body or '0'}]"


def insert_sums(a: TreeSum, i: int, b: TreeSum) -> TreeSum:
    """Bilinear extension of insert, without signs."""
    ks = list(a.tt.ks)
    if ks[i - 1] != b.tt.l:
        raise ValueError("colour mismatch")
    tt = TreeType(a.tt.l, tuple(ks[:i - 1]) + b.tt.ks + tuple(ks[i:]))
    out = TreeSum(tt)
    for t1, c1 in a.items():
        for t2, c2 in b.items():
            out.add(T.insert(t1, i, t2), c1 * c2)
    return out
