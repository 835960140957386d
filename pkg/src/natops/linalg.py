"""Exact integer linear algebra: sparse matrices, Smith normal form, spans.

Invariant factors are computed by eliminating unit pivots on the sparse
matrix (which leaves every non-unit invariant factor unchanged) and finishing
the small remaining core with a dense Smith normal form.
"""

from __future__ import annotations

from typing import Iterable


class SparseMatrix:
    """Integer matrix stored column-wise: ``cols[c] = {row: value}``."""

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols: list[dict[int, int]] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.cols = cols if cols is not None else [dict() for _ in range(ncols)]

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, entries: Iterable[tuple[int, int, int]]):
        m = cls(nrows, ncols)
        for r, c, v in entries:
            if v:
                col = m.cols[c]
                nv = col.get(r, 0) + v
                if nv:
                    col[r] = nv
                else:
                    col.pop(r, None)
        return m

    @classmethod
    def from_dense(cls, rows: list[list[int]]):
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        return cls.from_entries(nrows, ncols, ((r, c, v) for r, row in enumerate(rows)
                                               for c, v in enumerate(row)))

    def entries(self) -> list[tuple[int, int, int]]:
        return sorted((r, c, v) for c, col in enumerate(self.cols) for r, v in col.items())

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for r, c, v in self.entries():
            out[r][c] = v
        return out

    def is_zero(self) -> bool:
        return not any(self.cols)

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    def apply(self, vec: dict[int, int]) -> dict[int, int]:
        out: dict[int, int] = {}
        for c, x in vec.items():
            for r, v in self.cols[c].items():
                out[r] = out.get(r, 0) + x * v
        return {r: v for r, v in out.items() if v}

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        return SparseMatrix(self.nrows, other.ncols, [self.apply(c) for c in other.cols])

    def __eq__(self, other) -> bool:
        return (isinstance(other, SparseMatrix) and self.nrows == other.nrows
                and self.ncols == other.ncols and self.cols == other.cols)

    def to_json(self) -> dict:
        return {"rows": self.nrows, "cols": self.ncols,
                "entries": [[r, c, v] for r, c, v in self.entries()]}

    @classmethod
    def from_json(cls, obj: dict) -> "SparseMatrix":
        return cls.from_entries(obj["rows"], obj["cols"], (tuple(e) for e in obj["entries"]))

    def __repr__(self) -> str:
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"


def dense_smith(a: list[list[int]]) -> list[int]:
    """Nonzero diagonal of the Smith normal form (each divides the next)."""
    a = [row[:] for row in a]
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    t = 0
    while t < m and t < n:
        # pivot of least magnitude in the remaining block
        best = None
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        ri, rt = a[i], a[t]
                        for j in range(t, n):
                            ri[j] -= q * rt[j]
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for row in a[t:]:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        dirty = True
            if not dirty:
                # pivot clears its row and column; enforce divisibility
                bad = None
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if a[i][j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                rt, rb = a[t], a[bad]
                for j in range(t, n):
                    rt[j] += rb[j]
                continue
            # move the smallest nonzero entry of row/column t to the pivot
            cand = [(abs(a[i][t]), i, t) for i in range(t, m) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t, n) if a[t][j]]
            _, i, j = min(cand)
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def _components(mat: SparseMatrix) -> list[list[int]]:
    """Column indices grouped by connected components of the support graph."""
    parent = list(range(mat.ncols))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    first_col: dict[int, int] = {}
    for c, col in enumerate(mat.cols):
        for r in col:
            if r in first_col:
                a, b = find(c), find(first_col[r])
                if a != b:
                    parent[a] = b
            else:
                first_col[r] = c
    groups: dict[int, list[int]] = {}
    for c in range(mat.ncols):
        if mat.cols[c]:
            groups.setdefault(find(c), []).append(c)
    return list(groups.values())


def _eliminate(cols: dict[int, dict[int, int]]) -> tuple[int, dict[int, dict[int, int]]]:
    """Remove unit pivots; return (number removed, remaining core)."""
    rows: dict[int, dict[int, int]] = {}
    for c, col in cols.items():
        for r, v in col.items():
            rows.setdefault(r, {})[c] = v
    rank = 0
    progress = True
    while progress:
        progress = False
        order = sorted(cols, key=lambda c: len(cols[c]))
        for c in order:
            col = cols.get(c)
            if not col:
                cols.pop(c, None)
                continue
            piv = None
            for r, v in col.items():
                if v == 1 or v == -1:
                    if piv is None or len(rows[r]) < len(rows[piv]):
                        piv = r
            if piv is None:
                continue
            v = col[piv]
            prow = rows.pop(piv)
            # clear column c from the other rows: row_r -= (col[r] * v) * prow
            for r, x in list(col.items()):
                if r == piv:
                    continue
                f = x * v
                row = rows[r]
                for cc, y in prow.items():
                    nv = row.get(cc, 0) - f * y
                    target = cols[cc]
                    if nv:
                        row[cc] = nv
                        target[r] = nv
                    else:
                        row.pop(cc, None)
                        target.pop(r, None)
                if not row:
                    del rows[r]
            for cc in prow:
                if cc != c:
                    cols[cc].pop(piv, None)
                    if not cols[cc]:
                        del cols[cc]
            cols.pop(c, None)
            rank += 1
            progress = True
    return rank, {c: col for c, col in cols.items() if col}


def invariant_factors(mat: SparseMatrix) -> tuple[int, list[int]]:
    """(rank, sorted invariant factors > 1)."""
    rank = 0
    torsion: list[int] = []
    for comp in _components(mat):
        cols = {c: dict(mat.cols[c]) for c in comp}
        r, core = _eliminate(cols)
        rank += r
        if core:
            rid = sorted({r for col in core.values() for r in col})
            rpos = {r: i for i, r in enumerate(rid)}
            cid = sorted(core)
            dense = [[0] * len(cid) for _ in rid]
            for j, c in enumerate(cid):
                for r, v in core[c].items():
                    dense[rpos[r]][j] = v
            diag = dense_smith(dense)
            rank += len(diag)
            torsion += [d for d in diag if d > 1]
    return rank, sorted(torsion)


def rank(mat: SparseMatrix) -> int:
    return invariant_factors(mat)[0]


def column_hermite(vectors: list[dict], key=None) -> list[dict]:
    """A Z-basis (echelon form) of the subgroup spanned by sparse vectors."""
    basis: list[dict] = []  # each with a distinct leading coordinate
    lead: dict = {}
    order = key or (lambda k: k)
    for v in vectors:
        v = {k: x for k, x in v.items() if x}
        while v:
            p = min(v, key=order)
            if p not in lead:
                if v[p] < 0:
                    v = {k: -x for k, x in v.items()}
                lead[p] = len(basis)
                basis.append(v)
                break
            b = basis[lead[p]]
            # extended gcd step between v and b on coordinate p
            x, y = b[p], v[p]
            if y % x == 0:
                f = y // x
                v = _axpy(v, b, -f)
                continue
            g, s, t = _egcd(x, y)
            nb = _axpy(_scale(b, s), v, t)      # leading entry g
            nv = _axpy(_scale(b, -y // g), v, x // g)  # leading entry 0
            basis[lead[p]] = nb
            v = nv
    # reduce to canonical form is unnecessary for spans
    return basis


def _scale(v: dict, s: int) -> dict:
    return {k: s * x for k, x in v.items() if s * x}


def _axpy(v: dict, w: dict, a: int) -> dict:
    out = dict(v)
    for k, x in w.items():
        nv = out.get(k, 0) + a * x
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def solve_in_basis(basis: list[dict], v: dict, key=None) -> list[int] | None:
    """Integer coefficients expressing v in an echelon basis, or None."""
    order = key or (lambda k: k)
    leads = {}
    for i, b in enumerate(basis):
        leads[min(b, key=order)] = i
    coeffs = [0] * len(basis)
    v = {k: x for k, x in v.items() if x}
    while v:
        p = min(v, key=order)
        i = leads.get(p)
        if i is None:
            return None
        b = basis[i]
        if v[p] % b[p]:
            return None
        f = v[p] // b[p]
        coeffs[i] += f
        v = _axpy(v, b, -f)
    return coeffs
