"""The category I of intervals <n> = {-1, 0..n, n+1} and its crossed extension IS.

A morphism <m> -> <n> of IS is a map fixing both endpoints together with a
linear order on each fiber; -1 comes first in its fiber and m+1 last in its.
Morphisms of I are the non-decreasing ones with the natural fiber orders.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Hashable, Iterator, Mapping

from . import perm as P
from .perm import Perm


@dataclass(frozen=True)
class Interval:
    n: int

    def __post_init__(self):
        if self.n < -1:
            raise ValueError(f"<{self.n}> is not an interval")

    def points(self) -> range:
        return range(-1, self.n + 2)


@dataclass(frozen=True)
class IntervalMorphism:
    """``fibers[j]`` is the ordered preimage of target point ``j - 1``."""

    src: int
    dst: int
    fibers: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        m, n = self.src, self.dst
        fibers = tuple(tuple(f) for f in self.fibers)
        object.__setattr__(self, "fibers", fibers)
        if m < -1 or n < -1:
            raise ValueError("interval index below -1")
        if len(fibers) != n + 3:
            raise ValueError(f"expected {n + 3} fibers, got {len(fibers)}")
        seen = sorted(x for f in fibers for x in f)
        if seen != list(range(-1, m + 2)):
            raise ValueError("fibers do not partition the source")
        if not fibers[0] or fibers[0][0] != -1:
            raise ValueError("-1 must be minimal in the fiber over -1")
        if not fibers[-1] or fibers[-1][-1] != m + 1:
            raise ValueError(f"{m + 1} must be maximal in the fiber over {n + 1}")

    def __call__(self, x: int) -> int:
        for j, f in enumerate(self.fibers):
            if x in f:
                return j - 1
        raise ValueError(f"{x} not in <{self.src}>")

    @property
    def values(self) -> tuple[int, ...]:
        """Images of -1..m+1."""
        out = [0] * (self.src + 3)
        for j, f in enumerate(self.fibers):
            for x in f:
                out[x + 1] = j - 1
        return tuple(out)

    def fiber(self, j: int) -> tuple[int, ...]:
        return self.fibers[j + 1]

    def to_json(self) -> dict:
        return {
            "src": self.src,
            "dst": self.dst,
            "map": list(self.values),
            "fibers": {str(j - 1): list(f) for j, f in enumerate(self.fibers)},
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "IntervalMorphism":
        n = obj["dst"]
        fibers = tuple(tuple(obj["fibers"][str(j)]) for j in range(-1, n + 2))
        mor = cls(obj["src"], n, fibers)
        if "map" in obj and list(mor.values) != list(obj["map"]):
            raise ValueError("map disagrees with fibers")
        return mor


def from_values(m: int, n: int, values) -> IntervalMorphism:
    """The morphism with the given images of -1..m+1 and natural fiber orders."""
    values = list(values)
    if len(values) != m + 3:
        raise ValueError("wrong number of values")
    fibers = [[] for _ in range(n + 3)]
    for x, v in zip(range(-1, m + 2), values):
        if not -1 <= v <= n + 1:
            raise ValueError(f"value {v} outside <{n}>")
        fibers[v + 1].append(x)
    return IntervalMorphism(m, n, tuple(tuple(f) for f in fibers))


def identity(m: int) -> IntervalMorphism:
    return from_values(m, m, range(-1, m + 2))


def is_order_preserving(f: IntervalMorphism) -> bool:
    v = f.values
    if any(v[i] > v[i + 1] for i in range(len(v) - 1)):
        return False
    return all(list(fib) == sorted(fib) for fib in f.fibers)


def compose(g: IntervalMorphism, f: IntervalMorphism) -> IntervalMorphism:
    """g o f; fibers of the composite are concatenated blocks (block order)."""
    if f.dst != g.src:
        raise ValueError(f"cannot compose <{f.src}>->{f.dst}> with <{g.src}>->{g.dst}>")
    fibers = tuple(tuple(x for j in gf for x in f.fiber(j)) for gf in g.fibers)
    return IntervalMorphism(f.src, g.dst, fibers)


def hom(m: int, n: int) -> Iterator[IntervalMorphism]:
    """All IS-morphisms <m> -> <n>, in a fixed deterministic order."""
    for vals in itertools.product(range(-1, n + 2), repeat=m + 1):
        buckets = [[] for _ in range(n + 3)]
        for x, v in enumerate(vals):
            buckets[v + 1].append(x)
        choices = []
        for j, b in enumerate(buckets):
            orders = [list(p) for p in itertools.permutations(b)]
            if j == 0:
                orders = [[-1] + o for o in orders]
            if j == n + 2:
                orders = [o + [m + 1] for o in orders]
            choices.append(orders)
        for pick in itertools.product(*choices):
            yield IntervalMorphism(m, n, tuple(tuple(o) for o in pick))


def hom_order_preserving(m: int, n: int) -> Iterator[IntervalMorphism]:
    for vals in itertools.combinations_with_replacement(range(-1, n + 2), m + 1):
        yield from_values(m, n, (-1,) + vals + (n + 1,))


# Automorphisms.  The interior permutation h in S_{m+1} acts on <m> by the
# set map x -> h^{-1}(x+1) - 1; this is the convention under which the square
# h o d_{hbar(i)} = d_i o d_i(h) of the crossed relations commutes.

def automorphism(h: Perm) -> IntervalMorphism:
    m = h.q - 1
    inv = h.inverse()
    values = [-1] + [inv(x + 1) - 1 for x in range(m + 1)] + [m + 1]
    return from_values(m, m, values)


def interior_perm(a: IntervalMorphism) -> Perm:
    """Inverse of :func:`automorphism`."""
    if a.src != a.dst or any(len(f) != 1 for f in a.fibers):
        raise ValueError("not an automorphism")
    vals = a.values[1:-1]
    inv = tuple(v + 1 for v in vals)
    return Perm(inv).inverse()


def factorize(f: IntervalMorphism) -> tuple[IntervalMorphism, Perm]:
    """The unique (phi, h) with phi in I and f = phi o automorphism(h)."""
    m, n = f.src, f.dst
    values = []
    for j, fib in enumerate(f.fibers):
        values += [j - 1] * len(fib)
    phi = from_values(m, n, values)
    setmap = {}
    for fib, pfib in zip(f.fibers, phi.fibers):
        for t, u in zip(fib, pfib):
            setmap[t] = u
    aut = from_values(m, m, [setmap[x] for x in range(-1, m + 2)])
    return phi, interior_perm(aut)


def coface_generator(n: int, i: int) -> IntervalMorphism:
    """d_i = j(delta_i) : <n-1> -> <n-2>, hitting i-1 twice (0 <= i <= n)."""
    if n < 1 or not 0 <= i <= n:
        raise ValueError(f"coface d_{i} undefined for n={n}")
    vals = [x if x < i else x - 1 for x in range(-1, n + 1)]
    vals[0] = -1
    return from_values(n - 1, n - 2, vals)


def codegeneracy_generator(n: int, i: int) -> IntervalMorphism:
    """s_i = j(sigma_i) : <n-1> -> <n>, missing i (0 <= i <= n)."""
    if n < 0 or not 0 <= i <= n:
        raise ValueError(f"codegeneracy s_{i} undefined for n={n}")
    vals = [x if x < i else x + 1 for x in range(-1, n + 1)]
    vals[0] = -1
    return from_values(n - 1, n, vals)


def crossed_action(h: Perm, phi: IntervalMorphism) -> tuple[Perm, IntervalMorphism]:
    """(phi^*(h), h_*(phi)) with h o phi = h_*(phi) o phi^*(h)."""
    if not is_order_preserving(phi):
        raise ValueError("phi must lie in I")
    if h.q != phi.dst + 1:
        raise ValueError("h does not act on the target of phi")
    psi, k = factorize(compose(automorphism(h), phi))
    return k, psi


@dataclass(frozen=True)
class DeltaSMorphism:
    """A morphism [m] -> [n] of Delta S: a map with ordered fibers."""

    src: int
    dst: int
    fibers: tuple[tuple[int, ...], ...]

    @property
    def values(self) -> tuple[int, ...]:
        out = [0] * (self.src + 1)
        for j, f in enumerate(self.fibers):
            for x in f:
                out[x] = j
        return tuple(out)


def embed_into_deltaS(f: IntervalMorphism) -> DeltaSMorphism:
    """<n> |-> [n+2]; points are shifted by one so that g(i) = f(i-1) + 1."""
    fibers = tuple(tuple(x + 1 for x in fib) for fib in f.fibers)
    return DeltaSMorphism(f.src + 2, f.dst + 2, fibers)


# The free crossed functor on a cosimplicial object.  A cosimplicial object is
# anything with ``coface(x, i)`` and ``codegeneracy(x, i)`` returning formal
# sums {generator: coefficient}.

@dataclass(frozen=True, order=True)
class FreeCrossedElement:
    base: Hashable
    perm: Perm


def free_coface(e: FreeCrossedElement, i: int,
                base_coface: Callable[[Hashable, int], Mapping]) -> dict:
    h = e.perm
    j = P.bar_index(h, i)
    dh = P.coface(h, i)
    return {FreeCrossedElement(x, dh): c for x, c in base_coface(e.base, j).items() if c}


def free_codegeneracy(e: FreeCrossedElement, i: int,
                      base_codegeneracy: Callable[[Hashable, int], Mapping]) -> dict:
    h = e.perm
    j = P.under_index(h, i)
    sh = P.codegeneracy(h, i)
    return {FreeCrossedElement(x, sh): c for x, c in base_codegeneracy(e.base, j).items() if c}
