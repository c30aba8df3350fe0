"""Sparse exact linear algebra over a cyclotomic field.

Vectors are ``dict[int, CycElem]`` with no zero entries.  Matrices are lists of
columns, where column ``j`` is the sparse image of basis vector ``j``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .cyclotomic import CycElem, CyclotomicField

SparseVec = dict
Matrix = list  # list[SparseVec], one entry per column


def axpy(target: SparseVec, c: CycElem, v: SparseVec) -> None:
    """target += c * v, in place, dropping zeros."""
    for k, x in v.items():
        y = target.get(k)
        prod = c * x
        if y is None:
            if prod:
                target[k] = prod
        else:
            s = y + prod
            if s:
                target[k] = s
            else:
                del target[k]


def scale(v: SparseVec, c: CycElem) -> SparseVec:
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def vec_sub(u: SparseVec, v: SparseVec) -> SparseVec:
    out = dict(u)
    for k, x in v.items():
        y = out.get(k)
        if y is None:
            out[k] = -x
        else:
            s = y - x
            if s:
                out[k] = s
            else:
                del out[k]
    return out


class EchelonBasis:
    """Fully reduced row-echelon basis of a growing subspace.

    Each stored vector has value 1 at its pivot (its smallest index) and 0 at
    every other pivot, so the coordinate of a member ``v`` along basis vector
    ``i`` is simply ``v[pivot_i]``.
    """

    def __init__(self, field: CyclotomicField):
        self.field = field
        self._vecs: dict[int, SparseVec] = {}

    def __len__(self):
        return len(self._vecs)

    @property
    def pivots(self) -> list[int]:
        return sorted(self._vecs)

    def vectors(self) -> list[SparseVec]:
        """Basis vectors ordered by pivot."""
        return [dict(self._vecs[p]) for p in sorted(self._vecs)]

    def reduce(self, v: SparseVec) -> SparseVec:
        out = dict(v)
        hits = [(p, out[p]) for p in self._vecs if p in out]
        for p, c in hits:
            axpy(out, -c, self._vecs[p])
        return out

    def contains(self, v: SparseVec) -> bool:
        return not self.reduce(v)

    def add(self, v: SparseVec) -> bool:
        """Insert v; return True if it enlarged the span."""
        r = self.reduce(v)
        if not r:
            return False
        p = min(r)
        inv = r[p].inverse()
        if not inv.is_one():
            r = scale(r, inv)
        for q, b in self._vecs.items():
            c = b.get(p)
            if c is not None:
                axpy(b, -c, r)
        self._vecs[p] = r
        return True

    def coordinates(self, v: SparseVec) -> list[CycElem]:
        """Coordinates of a member of the span along ``vectors()``; raises if not a member."""
        if not self.contains(v):
            raise ValueError("vector is not in the span")
        zero = self.field.zero
        return [v.get(p, zero) for p in sorted(self._vecs)]


def rank(field: CyclotomicField, rows: Iterable[SparseVec]) -> int:
    eb = EchelonBasis(field)
    for r in rows:
        eb.add(r)
    return len(eb)


def nullspace(field: CyclotomicField, rows: Iterable[SparseVec], ncols: int) -> list[SparseVec]:
    """Basis of {x : r.x = 0 for every row r}, one vector per free column."""
    eb = EchelonBasis(field)
    for r in rows:
        if r:
            eb.add(r)
    piv = eb._vecs
    one = field.one
    basis = []
    for f in range(ncols):
        if f in piv:
            continue
        x = {f: one}
        for p, row in piv.items():
            c = row.get(f)
            if c is not None:
                x[p] = -c
        basis.append(x)
    return basis


# ---------------------------------------------------------------------------
# column-sparse matrices


def identity(field: CyclotomicField, n: int) -> Matrix:
    return [{i: field.one} for i in range(n)]


def mat_vec(a: Matrix, v: SparseVec) -> SparseVec:
    out: SparseVec = {}
    for j, x in v.items():
        axpy(out, x, a[j])
    return out


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """a @ b."""
    return [mat_vec(a, col) for col in b]


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    out = [dict(c) for c in a]
    for j, col in enumerate(b):
        for i, x in col.items():
            y = out[j].get(i)
            if y is None:
                out[j][i] = x
            else:
                s = y + x
                if s:
                    out[j][i] = s
                else:
                    del out[j][i]
    return out


def mat_scale(a: Matrix, c: CycElem) -> Matrix:
    return [scale(col, c) for col in a]


def kron(a: Matrix, b: Matrix, nb_rows: int) -> Matrix:
    """Kronecker product; basis (i, j) of the product is indexed i * nb_rows + j."""
    out = []
    for col_a in a:
        for col_b in b:
            col = {}
            for i, x in col_a.items():
                base = i * nb_rows
                for j, y in col_b.items():
                    p = x * y
                    if p:
                        col[base + j] = p
            out.append(col)
    return out


def mat_equal(a: Matrix, b: Matrix) -> bool:
    return len(a) == len(b) and all(x == y for x, y in zip(a, b))


def diagonal_entries(a: Matrix) -> list[CycElem] | None:
    """Diagonal of a, or None if a is not diagonal."""
    out = []
    for j, col in enumerate(a):
        if len(col) > 1 or (col and j not in col):
            return None
        out.append(col.get(j))
    return out


def to_dense(field: CyclotomicField, a: Matrix, nrows: int) -> list[list[CycElem]]:
    zero = field.zero
    return [[a[j].get(i, zero) for j in range(len(a))] for i in range(nrows)]


def from_dense(rows: Sequence[Sequence[CycElem]]) -> Matrix:
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    return [{i: rows[i][j] for i in range(nrows) if rows[i][j]} for j in range(ncols)]


def invert(field: CyclotomicField, a: Matrix) -> Matrix:
    """Inverse of a square matrix; raises ValueError if singular."""
    n = len(a)
    # row-reduce [A^T | I]: rows of A^T are the columns of A
    eb = EchelonBasis(field)
    for j, col in enumerate(a):
        row = dict(col)
        row[n + j] = field.one
        eb.add(row)
    if eb.pivots[:n] != list(range(n)) or len(eb) != n:
        raise ValueError("matrix is singular")
    # row i of the reduced block is row i of (A^T)^-1 = column i of A^-1 transposed
    inv_t = [{k - n: x for k, x in v.items() if k >= n} for v in eb.vectors()]
    # inv_t[i][j] = (A^T)^-1 [i, j] = (A^-1)[j, i]: so inv_t[i] is column i of A^-1
    return inv_t
