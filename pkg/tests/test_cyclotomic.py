from __future__ import annotations

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from pointed_hopf.cyclotomic import CyclotomicField, cyclotomic_poly, order_of_power, root_power
from pointed_hopf.errors import DivisionByZero


def poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def totient(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def test_small_cyclotomic_polys():
    assert cyclotomic_poly(1) == [-1, 1]
    assert cyclotomic_poly(3) == [1, 1, 1]
    assert cyclotomic_poly(12) == [1, 0, -1, 0, 1]


@pytest.mark.parametrize("ell", [6, 12, 15, 30])
def test_product_over_divisors(ell):
    prod = [Fraction(1)]
    for d in range(1, ell + 1):
        if ell % d == 0:
            prod = poly_mul(prod, cyclotomic_poly(d))
    assert prod == [-1] + [0] * (ell - 1) + [1]


def test_degree_is_totient():
    for ell in range(1, 31):
        assert len(cyclotomic_poly(ell)) - 1 == totient(ell)


def test_root_power_examples():
    assert root_power(7, 0).is_one()
    assert root_power(3, 3).is_one()
    a, b = root_power(3, 1), root_power(3, 2)
    assert (a * b).is_one()
    assert a + b == -1


def test_order_of_power():
    assert order_of_power(6, 2) == 3
    assert order_of_power(11, 0) == 1

    def brute(ell, k):
        t = root_power(ell, k)
        x, m = t, 1
        while not x.is_one():
            x, m = x * t, m + 1
        return m

    assert order_of_power(9, 6) == brute(9, 6) == 3
    for ell in range(1, 13):
        for k in range(ell):
            assert order_of_power(ell, k) == brute(ell, k)


def test_homomorphism_and_distinctness():
    for ell in range(1, 13):
        for a in range(ell):
            for b in range(ell):
                assert root_power(ell, a) * root_power(ell, b) == root_power(ell, a + b)
        assert len({root_power(ell, k) for k in range(ell)}) == ell


def test_inverse_examples():
    F = CyclotomicField(5)
    a = F(2) + F.root(1)
    assert (a * a.inverse()).is_one()
    assert a + F.zero == a
    F3 = CyclotomicField(3)
    d = F3.root(1) - F3.root(2)
    assert (d * d.inverse()).is_one()
    with pytest.raises(DivisionByZero):
        F.zero.inverse()


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        CyclotomicField(3).one + CyclotomicField(5).one


def test_text_and_json_rendering():
    F = CyclotomicField(5)
    x = F.from_coeffs([Fraction(1, 2), 0, -3])
    assert str(x) == "1/2 + -3*t^2"
    assert x.to_json() == ["1/2", "0", "-3", "0"]
    assert str(F.zero) == "0"


@st.composite
def elements(draw, ell=7):
    F = CyclotomicField(ell)
    nums = st.integers(-9, 9)
    dens = st.integers(1, 6)
    coeffs = draw(st.lists(st.builds(Fraction, nums, dens), min_size=1, max_size=F.degree + 3))
    return F.from_coeffs(coeffs)


@given(elements(), elements(), elements())
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == a.field.zero
    if a:
        assert (a / a).is_one()
        assert (b / a) * a == b


@given(st.integers(1, 30), st.integers(-100, 100))
def test_from_coeffs_reduces_high_powers(ell, k):
    F = CyclotomicField(ell)
    e = k % ell
    assert F.from_coeffs([0] * e + [1]) == F.root(k)
