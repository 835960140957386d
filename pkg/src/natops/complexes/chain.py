"""Free cochain complexes and bicomplexes over Z with exact homology."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Hashable

from ..linalg import SparseMatrix, dense_smith, invariant_factors


@dataclass(frozen=True)
class Homology:
    betti: int
    torsion: tuple[int, ...] = ()

    def is_zero(self) -> bool:
        return self.betti == 0 and not self.torsion

    def to_json(self) -> dict:
        return {"betti": self.betti, "torsion": list(self.torsion)}


class ChainComplex:
    """Cochain-graded: ``diff[m]`` maps degree m to degree m + 1.

    A missing ``diff[m]`` is the zero map.  Homology in a degree is exact for
    the complex as given; truncation artifacts are the caller's business.
    """

    def __init__(self, basis: dict[int, list], diff: dict[int, SparseMatrix] | None = None):
        self.basis = {m: list(b) for m, b in basis.items()}
        self.diff = dict(diff or {})
        self._index = {m: {x: i for i, x in enumerate(b)} for m, b in self.basis.items()}
        self._snf: dict[int, tuple[int, list[int]]] = {}
        for m, mat in self.diff.items():
            if mat.ncols != self.dim(m) or mat.nrows != self.dim(m + 1):
                raise ValueError(f"differential in degree {m} has wrong shape")

    def degrees(self) -> list[int]:
        return sorted(self.basis)

    def dim(self, m: int) -> int:
        return len(self.basis.get(m, ()))

    def index(self, m: int, x: Hashable) -> int:
        return self._index[m][x]

    def d(self, m: int) -> SparseMatrix:
        mat = self.diff.get(m)
        if mat is None:
            mat = SparseMatrix(self.dim(m + 1), self.dim(m))
        return mat

    def check_d_squared(self) -> bool:
        return all((self.d(m + 1) @ self.d(m)).is_zero() for m in self.degrees())

    def _factors(self, m: int) -> tuple[int, list[int]]:
        if m not in self._snf:
            self._snf[m] = invariant_factors(self.d(m))
        return self._snf[m]

    def homology(self, m: int) -> Homology:
        r_out, _ = self._factors(m)
        r_in, tors = self._factors(m - 1)
        return Homology(self.dim(m) - r_out - r_in, tuple(tors))

    def euler_window(self, lo: int, hi: int) -> int:
        return sum((-1) ** m * self.dim(m) for m in range(lo, hi + 1))

    def to_json(self) -> dict:
        return {str(m): {"basis": [str(x) for x in self.basis[m]],
                         "boundary": self.d(m).to_json()} for m in self.degrees()}

    @classmethod
    def from_json(cls, obj: dict) -> "ChainComplex":
        """Inverse of :meth:`to_json`; basis elements come back as their text form."""
        basis = {int(m): list(v["basis"]) for m, v in obj.items()}
        diff = {}
        for m, v in obj.items():
            mat = SparseMatrix.from_json(v["boundary"])
            if int(m) + 1 in basis and not mat.is_zero():
                diff[int(m)] = mat
        return cls(basis, diff)


def smith_homology(c: ChainComplex, degree: int) -> tuple[int, list[int]]:
    h = c.homology(degree)
    return h.betti, list(h.torsion)


class Bicomplex:
    """Groups E^m_k with d : E^m_k -> E^{m+1}_k and dv : E^m_k -> E^m_{k-1}."""

    def __init__(self, basis: dict[tuple[int, int], list],
                 d: dict[tuple[int, int], SparseMatrix],
                 dv: dict[tuple[int, int], SparseMatrix]):
        self.basis = {key: list(b) for key, b in basis.items() if b}
        self.d = d
        self.dv = dv

    def dim(self, m: int, k: int) -> int:
        return len(self.basis.get((m, k), ()))

    def _d(self, m, k):
        return self.d.get((m, k)) or SparseMatrix(self.dim(m + 1, k), self.dim(m, k))

    def _dv(self, m, k):
        return self.dv.get((m, k)) or SparseMatrix(self.dim(m, k - 1), self.dim(m, k))

    def check(self) -> bool:
        for (m, k) in self.basis:
            if not (self._d(m + 1, k) @ self._d(m, k)).is_zero():
                return False
            if not (self._dv(m, k - 1) @ self._dv(m, k)).is_zero():
                return False
            a = self._dv(m + 1, k) @ self._d(m, k)
            b = self._d(m, k - 1) @ self._dv(m, k)
            if a.nrows != b.nrows or a.ncols != b.ncols:
                return False
            s = SparseMatrix.from_entries(a.nrows, a.ncols, a.entries() + b.entries())
            if not s.is_zero():
                return False
        return True


def totalize(b: Bicomplex, window: tuple[int, int] | None = None) -> ChainComplex:
    """Product-total complex, D = d - dv, in total degree m - k.

    With a window (lo, hi) only total degrees lo..hi+1 are materialized, so
    homology is meaningful in lo..hi.
    """
    pieces: dict[int, list[tuple[int, int]]] = {}
    for (m, k) in sorted(b.basis):
        pieces.setdefault(m - k, []).append((m, k))
    if window is not None:
        lo, hi = window
        pieces = {t: v for t, v in pieces.items() if lo - 1 <= t <= hi + 1}
    basis: dict[int, list] = {}
    offset: dict[tuple[int, int], int] = {}
    for t, keys in pieces.items():
        out = []
        for key in keys:
            offset[key] = len(out)
            out += [(key, x) for x in b.basis[key]]
        basis[t] = out
    diff = {}
    for t in basis:
        if t + 1 not in basis:
            continue
        entries = []
        for (m, k) in pieces[t]:
            o = offset[(m, k)]
            if (m + 1, k) in offset:
                o2 = offset[(m + 1, k)]
                for r, c, v in b._d(m, k).entries():
                    entries.append((o2 + r, o + c, v))
            if (m, k - 1) in offset:
                o2 = offset[(m, k - 1)]
                for r, c, v in b._dv(m, k).entries():
                    entries.append((o2 + r, o + c, -v))
        diff[t] = SparseMatrix.from_entries(len(basis[t + 1]), len(basis[t]), entries)
    return ChainComplex(basis, diff)


def normalize_torsion(orders) -> tuple[int, ...]:
    orders = [o for o in orders if o > 1]
    if not orders:
        return ()
    diag = dense_smith([[orders[i] if i == j else 0 for j in range(len(orders))]
                        for i in range(len(orders))])
    return tuple(d for d in diag if d > 1)


def _tensor_groups(a: Homology, b: Homology) -> Homology:
    tors = [t for t in a.torsion for _ in range(b.betti)]
    tors += [t for t in b.torsion for _ in range(a.betti)]
    tors += [gcd(s, t) for s in a.torsion for t in b.torsion]
    return Homology(a.betti * b.betti, normalize_torsion(tors))


def _tor_groups(a: Homology, b: Homology) -> Homology:
    return Homology(0, normalize_torsion([gcd(s, t) for s in a.torsion for t in b.torsion]))


def kunneth(ha: dict[int, Homology], hb: dict[int, Homology]) -> dict[int, Homology]:
    """Cohomology of A (x) B for free cochain complexes from that of A and B.

    H^n = sum_{i+j=n} H^i (x) H^j  +  sum_{i+j=n+1} Tor(H^i, H^j).
    """
    out: dict[int, list[Homology]] = {}
    for i, x in ha.items():
        for j, y in hb.items():
            out.setdefault(i + j, []).append(_tensor_groups(x, y))
            out.setdefault(i + j - 1, []).append(_tor_groups(x, y))
    res = {}
    for n, parts in out.items():
        res[n] = Homology(sum(p.betti for p in parts),
                          normalize_torsion([t for p in parts for t in p.torsion]))
    return res


def tensor(a: ChainComplex, b: ChainComplex) -> ChainComplex:
    """A (x) B with d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy."""
    basis: dict[int, list] = {}
    for i in a.degrees():
        for j in b.degrees():
            basis.setdefault(i + j, []).extend((x, y) for x in a.basis[i] for y in b.basis[j])
    index = {t: {z: n for n, z in enumerate(v)} for t, v in basis.items()}
    diff = {}
    for t, gens in basis.items():
        if t + 1 not in basis:
            continue
        entries = []
        for c, (x, y) in enumerate(gens):
            i = _degree_of(a, x)
            j = t - i
            for r, v in a.d(i).cols[a.index(i, x)].items():
                entries.append((index[t + 1][(a.basis[i + 1][r], y)], c, v))
            s = -1 if i % 2 else 1
            for r, v in b.d(j).cols[b.index(j, y)].items():
                entries.append((index[t + 1][(x, b.basis[j + 1][r])], c, s * v))
        diff[t] = SparseMatrix.from_entries(len(basis[t + 1]), len(gens), entries)
    return ChainComplex(basis, diff)


def _degree_of(c: ChainComplex, x) -> int:
    for m, idx in c._index.items():
        if x in idx:
            return m
    raise KeyError(x)


def product_dim(dims: list[int]) -> int:
    return reduce(lambda u, v: u * v, dims, 1)
