"""Symmetric groups S_q with the grade calculus used by the free crossed functor.

Permutations are stored in one-line notation with 1-based images,
``images[i] = sigma(i + 1)``.  Strings of a braid diagram run from input
``i`` (bottom) to output ``sigma(i)`` (top).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True, order=True)
class Perm:
    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(v) for v in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation in one-line notation: {list(self.images)}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def of(cls, *images: int) -> "Perm":
        return cls(tuple(images))

    @classmethod
    def identity(cls, q: int) -> "Perm":
        return cls(tuple(range(1, q + 1)))

    @property
    def q(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __len__(self) -> int:
        return len(self.images)

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))

    def inverse(self) -> "Perm":
        inv = [0] * self.q
        for i, v in enumerate(self.images):
            inv[v - 1] = i + 1
        return Perm(tuple(inv))

    def __mul__(self, other: "Perm") -> "Perm":
        """Block sum ``self x other``: other acts on the inputs after self's."""
        return Perm(self.images + tuple(v + self.q for v in other.images))

    def to_json(self) -> list[int]:
        return list(self.images)

    def __repr__(self) -> str:
        return f"Perm({list(self.images)})"


def all_perms(q: int) -> Iterator[Perm]:
    for p in itertools.permutations(range(1, q + 1)):
        yield Perm(p)


def compose(p: Perm, q: Perm) -> Perm:
    """(p o q)(i) = p(q(i))."""
    if p.q != q.q:
        raise ValueError(f"arity mismatch: {p.q} vs {q.q}")
    return Perm(tuple(p.images[v - 1] for v in q.images))


def sign(p: Perm) -> int:
    imgs = p.images
    inv = sum(1 for a in range(len(imgs)) for b in range(a + 1, len(imgs)) if imgs[a] > imgs[b])
    return -1 if inv % 2 else 1


@dataclass(frozen=True)
class GradeDecomposition:
    a: int
    b: int
    c: int
    g: int
    omega: Perm
    kappa: Perm


def _split(p: Perm) -> tuple[int, Perm, int]:
    q = p.q
    a = 0
    while a < q and p.images[a] == a + 1:
        a += 1
    if a == q:
        return q, Perm(()), 0
    c = 0
    while p.images[q - 1 - c] == q - c:
        c += 1
    omega = Perm(tuple(v - a for v in p.images[a:q - c]))
    return a, omega, c


def doubled_positions(omega: Sequence[int] | Perm) -> list[int]:
    """1-based s with omega(s+1) = omega(s) + 1."""
    imgs = omega.images if isinstance(omega, Perm) else tuple(omega)
    return [s + 1 for s in range(len(imgs) - 1) if imgs[s + 1] == imgs[s] + 1]


def merge_pair(omega: Perm, s: int) -> Perm:
    """Merge the doubled strings starting at inputs s, s+1 into one string."""
    imgs = omega.images
    if imgs[s] != imgs[s - 1] + 1:
        raise ValueError(f"inputs {s},{s + 1} are not a doubled string of {omega}")
    top = imgs[s]
    rest = imgs[:s] + imgs[s + 1:]
    return Perm(tuple(v - 1 if v > top else v for v in rest))


def contract(p: Perm, choose=None) -> Perm:
    """The simple permutation kappa(p).

    ``choose`` picks which doubled pair to merge next (default: the first);
    the result does not depend on it.
    """
    if p.is_identity():
        return Perm((1,))
    _, omega, _ = _split(p)
    while True:
        pos = doubled_positions(omega)
        if not pos:
            return omega
        s = choose(pos) if choose is not None else pos[0]
        omega = merge_pair(omega, s)


def grade(p: Perm) -> GradeDecomposition:
    if p.is_identity():
        # the unit 1_n has grade n - 1 by convention
        n = p.q
        return GradeDecomposition(a=n, b=0, c=0, g=n - 1, omega=Perm(()), kappa=Perm((1,)))
    a, omega, c = _split(p)
    b = len(doubled_positions(omega))
    return GradeDecomposition(a=a, b=b, c=c, g=a + b + c, omega=omega, kappa=contract(p))


def is_simple(p: Perm) -> bool:
    return grade(p).g == 0


def simple_perms(m: int) -> list[Perm]:
    return [p for p in all_perms(m) if is_simple(p)]


def coface(p: Perm, i: int) -> Perm:
    """d_i : S_q -> S_{q+1}, 0 <= i <= q+1; inner indices double input i."""
    q = p.q
    if not 0 <= i <= q + 1:
        raise ValueError(f"coface index {i} out of range 0..{q + 1}")
    if i == 0:
        return Perm.identity(1) * p
    if i == q + 1:
        return p * Perm.identity(1)
    top = p(i)
    out: list[int] = []
    for j, v in enumerate(p.images, start=1):
        if j == i:
            out += [top, top + 1]
        else:
            out.append(v + 1 if v > top else v)
    return Perm(tuple(out))


def codegeneracy(p: Perm, i: int) -> Perm:
    """s_i : S_q -> S_{q-1}, 0 <= i <= q-1; deletes string i+1."""
    q = p.q
    if not 0 <= i <= q - 1:
        raise ValueError(f"codegeneracy index {i} out of range 0..{q - 1}")
    gone = p(i + 1)
    rest = p.images[:i] + p.images[i + 1:]
    return Perm(tuple(v - 1 if v > gone else v for v in rest))


def bar_index(h: Perm, i: int) -> int:
    """h-bar(i): the interior action of h extended by fixing 0 and n+1."""
    n = h.q
    if not 0 <= i <= n + 1:
        raise ValueError(f"index {i} out of range 0..{n + 1}")
    if i == 0 or i == n + 1:
        return i
    return h(i)


def under_index(h: Perm, i: int) -> int:
    """h-underbar(i) = h(i+1) - 1 for the 0-based codegeneracy indexing."""
    n = h.q
    if not 0 <= i <= n - 1:
        raise ValueError(f"index {i} out of range 0..{n - 1}")
    return h(i + 1) - 1
