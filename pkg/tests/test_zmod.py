from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from pointed_hopf.errors import NonInvertible
from pointed_hopf.two_param import TwoParamConfig, alt_det, build_A
from pointed_hopf.zmod import Residue, ResidueMatrix, bareiss_det, det_mod, invert_mod, solve_mod


def cofactor_det(rows):
    # independent oracle: Laplace expansion along the first row
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return total


def test_residue_canonical():
    assert Residue(-1, 5).value == 4
    assert Residue(7, 5) == 2
    assert Residue(3, 1).value == 0


def test_residue_mixed_moduli_rejected():
    with pytest.raises(ValueError):
        Residue(1, 3) + Residue(1, 4)


def test_residue_inverse():
    assert Residue(2, 3).inverse() == 2
    with pytest.raises(NonInvertible):
        Residue(2, 4).inverse()


def test_det_examples():
    assert det_mod(ResidueMatrix.from_rows([[2]], 3)) == Residue(2, 3)
    for n in range(1, 5):
        for ell in (2, 5, 12):
            assert det_mod(ResidueMatrix.identity(n, ell)) == 1
    cfg = TwoParamConfig(3, 5, 1, 2)
    assert det_mod(build_A(cfg)) == alt_det(cfg) == 3


def test_det_non_square():
    with pytest.raises(ValueError):
        det_mod(ResidueMatrix.from_rows([[1, 2]], 5))


def test_invert_examples():
    assert invert_mod(ResidueMatrix.from_rows([[2]], 3)).tolist() == [[2]]
    assert invert_mod(ResidueMatrix.identity(3, 7)) == ResidueMatrix.identity(3, 7)
    A = build_A(TwoParamConfig(2, 4, 1, 0))
    assert A.tolist() == [[1]]
    N = invert_mod(A)
    assert A @ N == ResidueMatrix.identity(1, 4)


def test_invert_non_unit_det():
    with pytest.raises(NonInvertible):
        invert_mod(ResidueMatrix.from_rows([[2, 0], [0, 1]], 4))


def test_solve_examples():
    assert solve_mod(ResidueMatrix.identity(3, 6), (1, 2, 5)) == (1, 2, 5)
    assert solve_mod(ResidueMatrix.from_rows([[2]], 3), (1,)) == (2,)


def test_psi_block_system_unique_by_search():
    from pointed_hopf.two_param import psi_block_matrix

    cfg = TwoParamConfig(2, 3, 1, 2)
    M = psi_block_matrix(cfg)
    sols = [x for x in itertools.product(range(3), repeat=2) if M.apply(x) == (1, 1)]
    assert len(sols) == 1
    assert solve_mod(M, (1, 1)) == sols[0]


@pytest.mark.parametrize("size", range(1, 5))
def test_det_matches_cofactor(size):
    rng = random.Random(size)
    for _ in range(40):
        rows = [[rng.randint(-20, 20) for _ in range(size)] for _ in range(size)]
        assert bareiss_det(rows) == cofactor_det(rows)
        ell = rng.randint(2, 12)
        assert det_mod(ResidueMatrix.from_rows(rows, ell)).value == cofactor_det(rows) % ell


def test_inverse_and_solve_random():
    rng = random.Random(7)
    for size in range(1, 7):
        for ell in range(2, 13):
            found = 0
            while found < 200 // 11 + 1:
                M = ResidueMatrix(size, size, ell, [rng.randrange(ell) for _ in range(size * size)])
                if not det_mod(M).is_unit():
                    continue
                found += 1
                N = invert_mod(M)
                I = ResidueMatrix.identity(size, ell)
                assert M @ N == I and N @ M == I
                b = tuple(rng.randrange(ell) for _ in range(size))
                assert M.apply(solve_mod(M, b)) == b


@st.composite
def unit_matrices(draw):
    size = draw(st.integers(1, 6))
    ell = draw(st.integers(2, 12))
    entries = draw(st.lists(st.integers(0, ell - 1), min_size=size * size, max_size=size * size))
    return ResidueMatrix(size, size, ell, entries)


@settings(max_examples=200, deadline=None)
@given(unit_matrices(), st.data())
def test_inverse_property(M, data):
    if not det_mod(M).is_unit():
        with pytest.raises(NonInvertible):
            invert_mod(M)
        return
    N = invert_mod(M)
    I = ResidueMatrix.identity(M.rows, M.modulus)
    assert M @ N == I and N @ M == I
    b = tuple(data.draw(st.lists(st.integers(0, M.modulus - 1), min_size=M.rows, max_size=M.rows)))
    assert M.apply(solve_mod(M, b)) == b


def test_block_assembly():
    I = ResidueMatrix.identity(2, 5)
    Z = ResidueMatrix.zeros(2, 2, 5)
    B = ResidueMatrix.block([[I, Z], [Z, I]])
    assert B == ResidueMatrix.identity(4, 5)
