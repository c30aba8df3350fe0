"""Exact linear algebra over Z/lZ for arbitrary (not necessarily prime) l.

Elimination never divides by non-units: determinants come from fraction-free
Bareiss elimination over the integers, inverses from the integer adjugate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import NonInvertible


@dataclass(frozen=True)
class Residue:
    """An integer modulo ``modulus``, stored canonically in ``[0, modulus)``."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be >= 1")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _other(self, other) -> int:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ValueError("residues with different moduli")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else Residue(self.value + o, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else Residue(self.value - o, self.modulus)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else Residue(o - self.value, self.modulus)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else Residue(self.value * o, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return (other - self.value) % self.modulus == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def is_unit(self) -> bool:
        return gcd(self.value, self.modulus) == 1

    def inverse(self) -> Residue:
        if not self.is_unit():
            raise NonInvertible(f"{self.value} is not a unit mod {self.modulus}")
        if self.modulus == 1:
            return Residue(0, 1)
        return Residue(pow(self.value, -1, self.modulus), self.modulus)


class ResidueMatrix:
    """A rows x cols matrix over Z/lZ with row-major integer entries in [0, l)."""

    __slots__ = ("rows", "cols", "modulus", "entries")

    def __init__(self, rows: int, cols: int, modulus: int, entries: Iterable[int]):
        if rows < 1 or cols < 1:
            raise ValueError("matrix dimensions must be positive")
        if modulus < 1:
            raise ValueError("modulus must be >= 1")
        ent = tuple(int(e) % modulus for e in entries)
        if len(ent) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(ent)}")
        self.rows = rows
        self.cols = cols
        self.modulus = modulus
        self.entries = ent

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], modulus: int) -> ResidueMatrix:
        return cls(len(rows), len(rows[0]), modulus, [e for row in rows for e in row])

    @classmethod
    def identity(cls, n: int, modulus: int) -> ResidueMatrix:
        return cls(n, n, modulus, [int(i == j) for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int, modulus: int) -> ResidueMatrix:
        return cls(rows, cols, modulus, [0] * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def tolist(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def __repr__(self):
        return f"ResidueMatrix({self.tolist()}, mod={self.modulus})"

    def __eq__(self, other):
        if not isinstance(other, ResidueMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.modulus, self.entries) == (
            other.rows, other.cols, other.modulus, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.modulus, self.entries))

    def _check_same(self, other: ResidueMatrix):
        if self.modulus != other.modulus:
            raise ValueError("matrices over different moduli")

    def __add__(self, other: ResidueMatrix) -> ResidueMatrix:
        self._check_same(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return ResidueMatrix(self.rows, self.cols, self.modulus,
                             [a + b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> ResidueMatrix:
        return ResidueMatrix(self.rows, self.cols, self.modulus, [-a for a in self.entries])

    def __sub__(self, other: ResidueMatrix) -> ResidueMatrix:
        return self + (-other)

    def __matmul__(self, other: ResidueMatrix) -> ResidueMatrix:
        self._check_same(other)
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        a, b = self.tolist(), other.tolist()
        out = [sum(a[i][k] * b[k][j] for k in range(self.cols))
               for i in range(self.rows) for j in range(other.cols)]
        return ResidueMatrix(self.rows, other.cols, self.modulus, out)

    def scale(self, k: int) -> ResidueMatrix:
        return ResidueMatrix(self.rows, self.cols, self.modulus, [k * a for a in self.entries])

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product, reduced mod l."""
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        c, m = self.cols, self.modulus
        return tuple(sum(self.entries[i * c + j] * int(v[j]) for j in range(c)) % m
                     for i in range(self.rows))

    def transpose(self) -> ResidueMatrix:
        return ResidueMatrix(self.cols, self.rows, self.modulus,
                             [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    @staticmethod
    def block(blocks: Sequence[Sequence[ResidueMatrix]]) -> ResidueMatrix:
        """Assemble a matrix from a grid of blocks with compatible shapes."""
        modulus = blocks[0][0].modulus
        rows = []
        for brow in blocks:
            h = brow[0].rows
            for i in range(h):
                row = []
                for blk in brow:
                    if blk.rows != h or blk.modulus != modulus:
                        raise ValueError("incompatible blocks")
                    row.extend(blk.tolist()[i])
                rows.append(row)
        return ResidueMatrix.from_rows(rows, modulus)


def bareiss_det(rows: Sequence[Sequence[int]]) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    a = [list(map(int, r)) for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def det_mod(m: ResidueMatrix) -> Residue:
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    return Residue(bareiss_det(m.tolist()), m.modulus)


def invert_mod(m: ResidueMatrix) -> ResidueMatrix:
    """Inverse over Z/lZ via the integer adjugate: adj(M) * det(M)^-1 mod l."""
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    n, ell = m.rows, m.modulus
    d = det_mod(m)
    if not d.is_unit():
        raise NonInvertible(f"det = {d.value} is not a unit mod {ell}")
    if ell == 1:
        return ResidueMatrix.zeros(n, n, 1)
    dz = bareiss_det(m.tolist())
    # dz is nonzero because it is a unit mod l >= 2, so the rational inverse exists
    inv_q = _rational_inverse(m.tolist())
    d_inv = d.inverse().value
    out = []
    for i in range(n):
        for j in range(n):
            adj = inv_q[i][j] * dz
            assert adj.denominator == 1
            out.append(int(adj) * d_inv)
    return ResidueMatrix(n, n, ell, out)


def _rational_inverse(rows: list[list[int]]) -> list[list[Fraction]]:
    n = len(rows)
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(rows)]
    for col in range(n):
        piv = next(i for i in range(col, n) if a[i][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [r[n:] for r in a]


def solve_mod(m: ResidueMatrix, b: Sequence[int]) -> tuple[int, ...]:
    """Unique x with Mx = b mod l; raises NonInvertible if M is singular mod l."""
    return invert_mod(m).apply(b)
