"""Exact arithmetic in the cyclotomic field Q(zeta_l).

Elements are polynomials in ``t`` (the class of the indeterminate, a primitive
l-th root of unity) reduced modulo the l-th cyclotomic polynomial.  Internally
the rational coefficients are kept as a tuple of integers over one positive
common denominator, which keeps hashing and the memoized products cheap.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Union

from .errors import DivisionByZero

Scalar = Union[int, Fraction, "CycElem"]

_MUL_CACHE_LIMIT = 1 << 18


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def _cyclotomic_int(ell: int) -> tuple[int, ...]:
    # (x^l - 1) / prod_{d | l, d < l} Phi_d(x), exact integer long division
    num = [-1] + [0] * (ell - 1) + [1]
    for d in _divisors(ell)[:-1]:
        num = _poly_exact_div(num, list(_cyclotomic_int(d)))
    return tuple(num)


def _poly_exact_div(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(q) - 1, -1, -1):
        c, r = divmod(num[i + len(den) - 1], lead)
        assert r == 0
        q[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    assert not any(num[:len(den) - 1])
    return q


def cyclotomic_poly(ell: int) -> list[Fraction]:
    """Coefficients (constant term first) of the l-th cyclotomic polynomial."""
    if ell < 1:
        raise ValueError("l must be >= 1")
    return [Fraction(c) for c in _cyclotomic_int(ell)]


def order_of_power(ell: int, k: int) -> int:
    """Multiplicative order of theta^k for theta a primitive l-th root of unity."""
    if ell < 1:
        raise ValueError("l must be >= 1")
    return ell // gcd(k % ell, ell)


class CyclotomicField:
    """The field Q(zeta_l); one shared instance per l."""

    _instances: dict[int, CyclotomicField] = {}

    def __new__(cls, ell: int):
        inst = cls._instances.get(ell)
        if inst is None:
            if ell < 1:
                raise ValueError("l must be >= 1")
            inst = super().__new__(cls)
            inst._setup(ell)
            cls._instances[ell] = inst
        return inst

    def _setup(self, ell: int):
        self.ell = ell
        self.modulus = _cyclotomic_int(ell)
        d = self.degree = len(self.modulus) - 1
        # x^k mod Phi for 0 <= k <= 2d - 2, as sparse (index, coeff) lists
        red = []
        cur = [0] * d
        cur[0] = 1
        for k in range(max(2 * d - 1, 1)):
            red.append(tuple((i, c) for i, c in enumerate(cur) if c))
            cur = self._times_x(cur)
        self._red = red
        # x^k mod Phi for 0 <= k < l
        powers = []
        cur = [0] * d
        cur[0] = 1
        for k in range(ell):
            powers.append(tuple(cur))
            cur = self._times_x(cur)
        self._mul_cache: dict = {}
        self._inv_cache: dict = {}
        self.zero = CycElem._make(self, (0,) * d, 1)
        self.one = CycElem._make(self, (1,) + (0,) * (d - 1), 1)
        self._roots = tuple(CycElem._make(self, p, 1) for p in powers)

    def _times_x(self, v: list[int]) -> list[int]:
        d = self.degree
        top = v[-1]
        out = [0] + v[:-1]
        if top:
            for i in range(d):
                out[i] -= top * self.modulus[i]
        return out

    def __repr__(self):
        return f"CyclotomicField({self.ell})"

    def __reduce__(self):
        return (CyclotomicField, (self.ell,))

    def root(self, k: int) -> CycElem:
        """theta^k."""
        return self._roots[k % self.ell]

    def __call__(self, value: Scalar) -> CycElem:
        if isinstance(value, CycElem):
            if value.field is not self:
                raise ValueError("element of a different cyclotomic field")
            return value
        if isinstance(value, int):
            if value == 0:
                return self.zero
            return CycElem._make(self, (value,) + (0,) * (self.degree - 1), 1)
        if isinstance(value, Fraction):
            return CycElem._make(self, (value.numerator,) + (0,) * (self.degree - 1),
                                 value.denominator)
        raise TypeError(f"cannot coerce {type(value).__name__} into {self!r}")

    def from_coeffs(self, coeffs: Iterable) -> CycElem:
        """Element with the given rational coefficients on 1, t, t^2, ... (reduced)."""
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in fr]
        d = self.degree
        acc = [0] * d
        for k, c in enumerate(ints):
            if not c:
                continue
            if k < len(self._red):
                for i, r in self._red[k]:
                    acc[i] += c * r
            else:
                for i, r in enumerate(self._roots[k % self.ell].num):
                    acc[i] += c * r
        return CycElem._normalized(self, acc, den)


class CycElem:
    """An element of Q(zeta_l), immutable and hashable."""

    __slots__ = ("field", "num", "den", "_h")

    field: CyclotomicField
    num: tuple[int, ...]
    den: int

    @classmethod
    def _make(cls, field, num, den) -> CycElem:
        self = object.__new__(cls)
        self.field = field
        self.num = num
        self.den = den
        self._h = None
        return self

    @classmethod
    def _normalized(cls, field, num, den) -> CycElem:
        g = gcd(den, *num)
        if g != 1:
            num = [c // g for c in num]
            den //= g
        return cls._make(field, tuple(num), den)

    @property
    def ell(self) -> int:
        return self.field.ell

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self):
        return any(self.num)

    def is_one(self) -> bool:
        return self.den == 1 and self.num[0] == 1 and not any(self.num[1:])

    def _coerce(self, other) -> CycElem:
        if type(other) is CycElem:
            if other.field is not self.field:
                raise ValueError("arithmetic between different cyclotomic fields")
            return other
        return self.field(other)

    def __eq__(self, other):
        if type(other) is CycElem:
            return self.field is other.field and self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == self.field(other)
        return NotImplemented

    def __hash__(self):
        h = self._h
        if h is None:
            h = self._h = hash((self.field.ell, self.num, self.den))
        return h

    def __add__(self, other) -> CycElem:
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if not any(o.num):
            return self
        if not any(self.num):
            return o
        if self.den == o.den:
            return CycElem._normalized(self.field, [a + b for a, b in zip(self.num, o.num)], self.den)
        da, db = self.den, o.den
        return CycElem._normalized(self.field, [a * db + b * da for a, b in zip(self.num, o.num)],
                                   da * db)

    __radd__ = __add__

    def __neg__(self) -> CycElem:
        return CycElem._make(self.field, tuple(-a for a in self.num), self.den)

    def __sub__(self, other) -> CycElem:
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> CycElem:
        return self._coerce(other) - self

    def __mul__(self, other) -> CycElem:
        F = self.field
        if type(other) is CycElem and other.field is F:
            o = other
            key = (self.num, self.den, o.num, o.den)
            r = F._mul_cache.get(key)
            if r is not None:
                return r
        else:
            try:
                o = self._coerce(other)
            except TypeError:
                return NotImplemented
            key = (self.num, self.den, o.num, o.den)
        cache = F._mul_cache
        if not any(self.num) or not any(o.num):
            return F.zero
        acc = [0] * F.degree
        red = F._red
        for i, a in enumerate(self.num):
            if a:
                for j, b in enumerate(o.num):
                    if b:
                        ab = a * b
                        for t, c in red[i + j]:
                            acc[t] += ab * c
        r = CycElem._normalized(F, acc, self.den * o.den)
        if len(cache) > _MUL_CACHE_LIMIT:
            cache.clear()
        cache[key] = r
        return r

    __rmul__ = __mul__

    def inverse(self) -> CycElem:
        F = self.field
        if not any(self.num):
            raise DivisionByZero("inverse of zero in a cyclotomic field")
        key = (self.num, self.den)
        r = F._inv_cache.get(key)
        if r is None:
            r = _xgcd_inverse(self)
            if len(F._inv_cache) > _MUL_CACHE_LIMIT:
                F._inv_cache.clear()
            F._inv_cache[key] = r
        return r

    def __truediv__(self, other) -> CycElem:
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> CycElem:
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> CycElem:
        if k < 0:
            return self.inverse() ** (-k)
        out, base = self.field.one, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if i == 0 else (f"{c}*t" if i == 1 else f"{c}*t^{i}"))
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return f"CycElem({self}, ell={self.ell})"

    def to_json(self) -> list[str]:
        """Exact coefficient strings, constant term first."""
        return [str(c) for c in self.coeffs]


def _xgcd_inverse(a: CycElem) -> CycElem:
    """Inverse by the extended Euclidean algorithm against the cyclotomic polynomial."""
    F = a.field
    if F.degree == 1:
        return F(Fraction(a.den, a.num[0]))

    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    r0 = [Fraction(c) for c in F.modulus]
    r1 = trim([Fraction(c, a.den) for c in a.num])
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    # r1 is a nonzero constant because Phi_l is irreducible
    c = r1[0]
    return F.from_coeffs([x / c for x in s1])


def _poly_mul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _poly_sub(p, q):
    n = max(len(p), len(q))
    out = [(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def _poly_divmod(num, den):
    num = list(num)
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    lead = den[-1]
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1] / lead
        q[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    rem = num[:len(den) - 1]
    while rem and rem[-1] == 0:
        rem.pop()
    return q, rem


def root_power(ell: int, k: int) -> CycElem:
    """theta^(k mod l) in Q(zeta_l)."""
    return CyclotomicField(ell).root(k)
