"""The dg structure on the totalized tree operad.

An element of B(n) of degree D is a (possibly infinite) family of trees with
l - (k_1 + ... + k_n) = D; here it is a finite dict tree -> coefficient that
may mix types.  The differential is d = delta - (d_1 + ... + d_n): delta
post-composes with the Hochschild faces of the output, d_j pre-composes input
j with the faces of C^{k_j - 1}.  Signs are those of the commutator with the
Hochschild coboundary in the endomorphism operad of C*(A;A):

    dT = sum_i e(l,i) C^l_i o_1 T
         - (-1)^{|T|} sum_j (-1)^{|k_1|+..+|k_{j-1}|} sum_i e(k_j-1,i) T o_j C^{k_j-1}_i

with e(m,i) the face sign of the Hochschild coboundary on C^m and |.| the
grading of the convention.  Operadic composition carries the Koszul sign
(-1)^{|b| (|k_1|+..+|k_{i-1}|)} and the symmetric action permutes inputs with
the Koszul sign of their degrees.

The brace twist conjugates this structure by (-1)^{phi(type)}, where phi is
(k_1 + k_2)(k_2 + ... + k_n) on types with l - sum k = 1 - n and zero
elsewhere.  Conjugation by a sign depending only on the type is an
isomorphism of dg operads, and in the twisted structure the cup product and
the braces with their standard sign are closed under d.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from ..perm import Perm
from . import trees as T
from .generators import generator_coface
from .sums import TreeSum
from .trees import Tree, TreeType

GRADINGS = ("arity", "suspended", "none")
FACE_SIGNS = ("plain", "nerve")
TWISTS = ("brace", "none")


@dataclass(frozen=True)
class Convention:
    grading: str = "arity"
    faces: str = "plain"
    twist: str = "brace"

    def __post_init__(self):
        if self.grading not in GRADINGS or self.faces not in FACE_SIGNS or self.twist not in TWISTS:
            raise ValueError(f"unknown convention {self}")

    def input_degree(self, k: int) -> int:
        if self.grading == "arity":
            return k
        if self.grading == "suspended":
            return k - 1
        return 0

    def degree(self, tt: TreeType) -> int:
        """Degree of a tree as an operation, as it enters Koszul signs."""
        if self.grading == "none":
            return 0
        return self.input_degree(tt.l) - sum(self.input_degree(k) for k in tt.ks)

    def face_sign(self, m: int, i: int) -> int:
        e = i + (m if self.faces == "nerve" else 0)
        return -1 if e % 2 else 1

    def phi(self, tt: TreeType) -> int:
        return _brace_phi(tt) if self.twist == "brace" else 0

    def label(self) -> str:
        return f"{self.grading}/{self.faces}/{self.twist}"


DEFAULT = Convention("arity", "plain", "brace")


def candidates() -> list[Convention]:
    return [Convention(g, f, w) for g in GRADINGS for f in FACE_SIGNS for w in TWISTS]


@lru_cache(maxsize=None)
def _brace_phi(tt: TreeType) -> int:
    n = tt.n
    if n < 2 or tt.l - sum(tt.ks) != 1 - n:
        return 0
    return (tt.ks[0] + tt.ks[1]) * sum(tt.ks[1:]) % 2


tree_type = lru_cache(maxsize=None)(T.tree_type)
_insert = lru_cache(maxsize=1 << 20)(T.insert)


class Chain:
    """Finite integer combination of trees of one arity (types may differ)."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Tree, int] | None = None):
        self.terms = {t: c for t, c in (terms or {}).items() if c}

    @classmethod
    def of(cls, x) -> "Chain":
        if isinstance(x, Chain):
            return x
        if isinstance(x, TreeSum):
            return cls(dict(x.terms))
        if isinstance(x, dict):
            return cls(x)
        return cls({x: 1})

    def add(self, t: Tree, c: int) -> None:
        if c:
            v = self.terms.get(t, 0) + c
            if v:
                self.terms[t] = v
            else:
                del self.terms[t]

    def __add__(self, other: "Chain") -> "Chain":
        out = Chain(self.terms)
        for t, c in Chain.of(other).terms.items():
            out.add(t, c)
        return out

    def __sub__(self, other: "Chain") -> "Chain":
        return self + Chain.of(other).scale(-1)

    def scale(self, s: int) -> "Chain":
        return Chain({t: s * c for t, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, Chain) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def components(self) -> dict[TreeType, TreeSum]:
        out: dict[TreeType, TreeSum] = {}
        for t, c in self.terms.items():
            tt = tree_type(t)
            out.setdefault(tt, TreeSum(tt)).add(t, c)
        return out

    def restrict(self, pred) -> "Chain":
        return Chain({t: c for t, c in self.terms.items() if pred(tree_type(t))})

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*{T.show(t)}" for t, c in sorted(self.terms.items()))
        return f"Chain[{body or '0'}]"


def _prefix(conv: Convention, ks: tuple[int, ...], i: int) -> int:
    return sum(conv.input_degree(k) for k in ks[:i - 1])


def compose_sign(conv: Convention, a: TreeType, i: int, b: TreeType) -> int:
    e = conv.degree(b) * _prefix(conv, a.ks, i)
    return -1 if e % 2 else 1


def dg_insert(a: Tree, i: int, b: Tree, conv: Convention = DEFAULT) -> tuple[int, Tree]:
    """Signed operadic composition a o_i b = sign * insert(a, i, b)."""
    ta, tb = tree_type(a), tree_type(b)
    t = _insert(a, i, b)
    s = compose_sign(conv, ta, i, tb)
    if (conv.phi(ta) + conv.phi(tb) + conv.phi(tree_type(t))) % 2:
        s = -s
    return s, t


def compose(x, i: int, y, conv: Convention = DEFAULT) -> Chain:
    """Bilinear signed composition of chains; pairs with mismatched colours vanish."""
    out = Chain()
    for a, ca in Chain.of(x).items():
        ka = tree_type(a).ks[i - 1]
        for b, cb in Chain.of(y).items():
            if tree_type(b).l != ka:
                continue
            s, t = dg_insert(a, i, b, conv)
            out.add(t, s * ca * cb)
    return out


def koszul_sym_sign(conv: Convention, ks: tuple[int, ...], sigma: Perm) -> int:
    e = 0
    n = len(ks)
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if sigma(a) > sigma(b):
                e += conv.input_degree(ks[a - 1]) * conv.input_degree(ks[b - 1])
    return -1 if e % 2 else 1


def act(x, sigma: Perm, conv: Convention = DEFAULT) -> Chain:
    """Relabel white j as sigma(j), with the Koszul sign of the input permutation."""
    out = Chain()
    for t, c in Chain.of(x).items():
        s = koszul_sym_sign(conv, tree_type(t).ks, sigma)
        u = T.sym_act(t, sigma)
        if (conv.phi(tree_type(t)) + conv.phi(tree_type(u))) % 2:
            s = -s
        out.add(u, s * c)
    return out


def _black(kids) -> Tree:
    """Black vertex over canonical children, normalized by R1-R4."""
    flat = []
    for c in kids:
        if c[0] == "B":
            flat.extend(c[1])
        elif c[0] != "S":
            flat.append(c)
    if not flat:
        return T.DOT
    if len(flat) == 1:
        return flat[0]
    return ("B", tuple(flat))


def _shift_legs(t: Tree, at: int, leg_i: int = 0) -> Tree:
    """Raise leg labels >= at by one; leg leg_i (if given) becomes Black(i, i+1)."""
    kind = t[0]
    if kind == "L":
        p = t[1]
        if p == leg_i:
            return ("B", (("L", p), ("L", p + 1)))
        return ("L", p + 1) if p >= at else t
    if kind == "W":
        return ("W", t[1], tuple(_shift_legs(c, at, leg_i) for c in t[2]))
    if kind == "B":
        return _black([_shift_legs(c, at, leg_i) for c in t[1]])
    return t


def delta_faces(t: Tree, l: int) -> list[Tree]:
    """The cofaces d_0 .. d_{l+1} of the output: (coface tree) o_1 t."""
    out = [_black((("L", 1), _shift_legs(t, 1)))]
    for i in range(1, l + 1):
        out.append(_shift_legs(t, i + 1, i))
    out.append(_black((t, ("L", l + 1))))
    return out


def _white_face(kids: tuple, j: int, i: int) -> Tree:
    k = len(kids)
    if i == 0:
        return _black((kids[0], ("W", j, kids[1:])))
    if i == k:
        return _black((("W", j, kids[:-1]), kids[-1]))
    return ("W", j, kids[:i - 1] + (_black(kids[i - 1:i + 1]),) + kids[i + 1:])


def white_faces(t: Tree, j: int, k: int) -> list[Tree]:
    """t o_j (coface tree of C^{k-1} at i) for i = 0..k."""
    def walk(x: Tree, i: int) -> Tree:
        kind = x[0]
        if kind == "W":
            if x[1] == j:
                return _white_face(x[2], j, i)
            return ("W", x[1], tuple(walk(c, i) for c in x[2]))
        if kind == "B":
            return _black([walk(c, i) for c in x[1]])
        return x

    return [walk(t, i) for i in range(k + 1)]


def _d_terms(t: Tree, conv: Convention, faces) -> tuple[tuple[Tree, int], ...]:
    tt = tree_type(t)
    acc: dict[Tree, int] = {}
    p = conv.phi(tt)

    def put(x, c, ut):
        if (p + conv.phi(ut)) % 2:
            c = -c
        v = acc.get(x, 0) + c
        if v:
            acc[x] = v
        else:
            del acc[x]

    up = TreeType(tt.l + 1, tt.ks)
    for i, u in enumerate(faces.delta(t, tt.l)):
        put(u, conv.face_sign(tt.l, i), up)
    outer = -1 if conv.degree(tt) % 2 else 1
    for j, k in enumerate(tt.ks, start=1):
        if k == 0:
            continue
        pre = -1 if _prefix(conv, tt.ks, j) % 2 else 1
        down = TreeType(tt.l, tt.ks[:j - 1] + (k - 1,) + tt.ks[j:])
        for i, u in enumerate(faces.white(t, j, k)):
            put(u, -outer * pre * conv.face_sign(k - 1, i), down)
    return tuple(acc.items())


class _DirectFaces:
    delta = staticmethod(delta_faces)
    white = staticmethod(white_faces)


class _InsertFaces:
    """Faces computed by literal vertex insertion of the generator trees."""

    @staticmethod
    def delta(t: Tree, l: int) -> list[Tree]:
        return [_insert(generator_coface(l, i), 1, t) for i in range(l + 2)]

    @staticmethod
    def white(t: Tree, j: int, k: int) -> list[Tree]:
        return [_insert(t, j, generator_coface(k - 1, i)) for i in range(k + 1)]


@lru_cache(maxsize=1 << 18)
def _d_tree(t: Tree, conv: Convention) -> tuple[tuple[Tree, int], ...]:
    return _d_terms(t, conv, _DirectFaces)


def d_by_insertion(t: Tree, conv: Convention = DEFAULT) -> Chain:
    """The differential of a single tree via vertex insertion (reference path)."""
    return Chain(dict(_d_terms(t, conv, _InsertFaces)))


def differential(x, conv: Convention = DEFAULT) -> Chain:
    out = Chain()
    for t, c in Chain.of(x).items():
        for u, v in _d_tree(t, conv):
            out.add(u, c * v)
    return out


def delta_part(x, conv: Convention = DEFAULT) -> Chain:
    """The cosimplicial part of d (raises l)."""
    d = differential(x, conv)
    return Chain({t: c for t, c in d.items() if _raises_l(t, x)})


def _raises_l(t: Tree, x) -> bool:
    ls = {tree_type(u).l for u, _ in Chain.of(x).items()}
    return tree_type(t).l not in ls


def leibniz_defect(a: Tree, i: int, b: Tree, conv: Convention = DEFAULT) -> Chain:
    """d(a o_i b) - d(a) o_i b - (-1)^{deg a} a o_i d(b)."""
    lhs = differential(compose(a, i, b, conv), conv)
    s = -1 if tree_type(a).degree % 2 else 1
    rhs = compose(differential(a, conv), i, b, conv) + compose(a, i, differential(b, conv), conv).scale(s)
    return lhs - rhs


def iter_terms(xs: Iterable) -> Iterable[tuple[Tree, int]]:
    for x in xs:
        yield from Chain.of(x).items()
