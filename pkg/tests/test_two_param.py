from __future__ import annotations

import itertools
from math import gcd

import pytest
from hypothesis import assume, given, settings, strategies as st

from pointed_hopf import two_param as tp
from pointed_hopf.errors import NonInvertible, PreconditionFailed, TooLarge
from pointed_hopf.two_param import GroupLikeU, TwoParamConfig
from pointed_hopf.zmod import det_mod

from test_zmod import cofactor_det


@st.composite
def configs(draw, max_n=6, max_ell=12):
    n = draw(st.integers(2, max_n))
    ell = draw(st.integers(2, max_ell))
    y = draw(st.integers(0, ell - 1))
    z = draw(st.integers(0, ell - 1).filter(lambda v: v != y))
    return TwoParamConfig(n, ell, y, z)


def test_config_canonicalizes_and_rejects():
    cfg = TwoParamConfig(2, 5, 6, -1)
    assert (cfg.y, cfg.z) == (1, 4)
    with pytest.raises(ValueError):
        TwoParamConfig(2, 5, 2, 7)


def test_build_A_examples():
    assert tp.build_A(TwoParamConfig(2, 3, 1, 2)).tolist() == [[2]]
    assert tp.build_A(TwoParamConfig(3, 7, 1, 0)).tolist() == [[1, 0], [6, 1]]
    cfg = TwoParamConfig(4, 5, 2, 1)
    assert det_mod(tp.build_A(cfg)) == tp.alt_det(cfg)


def test_alt_det_examples():
    assert tp.alt_det(TwoParamConfig(2, 7, 5, 2)) == 3
    assert tp.alt_det(TwoParamConfig(3, 3, 1, 2)) == 0


@settings(max_examples=150, deadline=None)
@given(configs())
def test_alt_det_is_det_A(cfg):
    A = tp.build_A(cfg)
    assert tp.alt_det(cfg).value == cofactor_det(A.tolist()) % cfg.ell == det_mod(A).value


def test_is_double_examples():
    assert tp.is_double(TwoParamConfig(2, 3, 1, 2))
    assert not tp.is_double(TwoParamConfig(3, 3, 1, 2))
    assert tp.is_double(TwoParamConfig(2, 4, 1, 0))


def test_central_b_examples():
    for ell in (3, 5, 7):
        for n in (2, 3, 4):
            cfg = TwoParamConfig(n, ell, 1, ell - 1)
            if not cfg.double_ok:
                continue
            for a in itertools.product(range(ell), repeat=n - 1):
                assert tp.central_b_from_a(cfg, a) == a
    cfg = TwoParamConfig(3, 5, 1, 0)
    assert tp.central_b_from_a(cfg, (0, 0)) == (0, 0)
    b = tp.central_b_from_a(cfg, (1, 0))
    assert tp.is_central_pair(cfg, GroupLikeU((1, 0), b))


def test_central_b_needs_double():
    with pytest.raises(NonInvertible):
        tp.central_b_from_a(TwoParamConfig(3, 3, 1, 2), (1, 0))
    with pytest.raises(PreconditionFailed):
        tp.central_subgroup(TwoParamConfig(3, 3, 1, 2))


def test_is_central_pair_examples():
    cfg = TwoParamConfig(2, 3, 1, 2)
    assert tp.is_central_pair(cfg, GroupLikeU((0,), (0,)))
    assert tp.is_central_pair(cfg, GroupLikeU((1,), (1,)))
    assert not tp.is_central_pair(cfg, GroupLikeU((1,), (2,)))


def test_central_subgroup_small():
    cfg = TwoParamConfig(2, 3, 1, 2)
    gc = tp.central_subgroup(cfg)
    assert sorted((g.a_exp, g.b_exp) for g in gc) == [((a,), (a,)) for a in range(3)]
    assert GroupLikeU((0,), (0,)) in gc


@pytest.mark.parametrize("n", [2, 3])
def test_central_subgroup_equals_scan(n):
    for ell in range(2, 8):
        for cfg in tp.valid_configs(n, ell):
            if not cfg.double_ok:
                continue
            gc = tp.central_subgroup(cfg)
            assert len(gc) == ell ** (n - 1)
            assert all(tp.is_central_pair(cfg, g) for g in gc)
            key = lambda g: (g.a_exp, g.b_exp)  # noqa: E731
            assert sorted(tp.central_subgroup_by_scan(cfg), key=key) == sorted(gc, key=key)


def test_dimension_count():
    for n in range(2, 5):
        for ell in range(2, 6):
            for cfg in tp.valid_configs(n, ell):
                assert tp.dim_u(cfg) == ell ** ((n - 1) * (n + 2))
                if cfg.double_ok:
                    assert tp.dim_quotient(cfg) == ell ** (n * n - 1)


def test_beta_of_g_examples():
    for ell in (3, 5, 7):
        cfg = TwoParamConfig(2, ell, 1, ell - 1)
        for c in range(ell):
            assert tp.beta_of_g(cfg, (c,)) == ((-2 * c) % ell,)
    assert tp.beta_of_g(TwoParamConfig(3, 5, 1, 3), (0, 0)) == (0, 0)


def _kills_central(cfg, beta, c):
    # central h = w^a w'^b acts on H ._beta g by the scalar theta^(sum a_i e_i + sum b_i beta_i)
    for h in tp.central_subgroup(cfg):
        x = sum(a * tp.pair_w_exponent(cfg, i, c).value for i, a in enumerate(h.a_exp))
        x += sum(b * be for b, be in zip(h.b_exp, beta))
        if x % cfg.ell:
            return False
    return True


def test_beta_of_g_is_unique_central_invariant():
    cfg = TwoParamConfig(3, 5, 1, 3)
    c = (1, 2)
    beta = tp.beta_of_g(cfg, c)
    found = [b for b in itertools.product(range(5), repeat=2) if _kills_central(cfg, b, c)]
    assert found == [beta]


def test_g_of_chi_examples():
    cfg = TwoParamConfig(2, 3, 1, 2)
    assert tp.g_of_chi(cfg, (0,)) == (0,)
    assert tp.g_of_chi(cfg, (1,)) == (2,)
    with pytest.raises(PreconditionFailed):
        tp.g_of_chi(TwoParamConfig(3, 3, 1, 2), (1, 1))


@settings(max_examples=100, deadline=None)
@given(configs(max_n=5), st.data())
def test_g_of_chi_inverts_A(cfg, data):
    assume(cfg.double_ok)
    chi = tuple(data.draw(st.lists(st.integers(0, cfg.ell - 1), min_size=cfg.rank, max_size=cfg.rank)))
    assert tp.build_A(cfg).apply(tp.g_of_chi(cfg, chi)) == chi


def _pairing_oracle(cfg, i, c):
    # <w_i, w'_j> = r^<e_i, a_j> s^<e_{i+1}, a_j>, with <e_i, a_j> = delta_ij - delta_{i,j+1}
    def bracket(i, j):
        return int(i == j) - int(i == j + 1)

    return sum(cj * (cfg.y * bracket(i, j) + cfg.z * bracket(i + 1, j)) for j, cj in enumerate(c)) % cfg.ell


def test_pair_w_exponent():
    cfg = TwoParamConfig(2, 5, 1, 3)
    assert tp.pair_w_exponent(cfg, 0, (0,)) == 0
    for c in range(5):
        assert tp.pair_w_exponent(cfg, 0, (c,)) == (cfg.y - cfg.z) * c
    for n in (3, 4):
        for cfg in tp.valid_configs(n, 5):
            if not (cfg.double_ok and cfg.rs_primitive):
                continue
            for c in itertools.product(range(5), repeat=n - 1):
                for i in range(n - 1):
                    assert tp.pair_w_exponent(cfg, i, c).value == _pairing_oracle(cfg, i, c)


def test_pair_w_exponent_is_Ac():
    cfg = TwoParamConfig(4, 7, 2, 5)
    A = tp.build_A(cfg)
    for c in [(1, 0, 0), (0, 3, 1), (6, 6, 2)]:
        assert tuple(tp.pair_w_exponent(cfg, i, c).value for i in range(3)) == A.apply(c)


def test_factorization_examples():
    assert tp.factorization_bijective(TwoParamConfig(2, 3, 1, 2))
    cfg = TwoParamConfig(2, 4, 1, 0)
    assert cfg.double_ok and not tp.factorization_bijective(cfg)
    with pytest.raises(PreconditionFailed) as err:
        tp.factorization_bijective(TwoParamConfig(3, 3, 1, 2))
    assert err.value.flag == "double_ok"
    with pytest.raises(PreconditionFailed) as err:
        tp.factorization_bijective(TwoParamConfig(3, 4, 3, 1))
    assert err.value.flag == "rs_primitive"


@settings(max_examples=100, deadline=None)
@given(configs())
def test_det_identity_and_criterion(cfg):
    n, y, z, ell = cfg.n, cfg.y, cfg.z, cfg.ell
    assert tp.det_A_plus_At(cfg) == ((y - z) ** (n - 1) * n) % ell
    if cfg.double_ok and cfg.rs_primitive:
        assert tp.factorization_bijective(cfg) == (gcd(tp.det_A_plus_At(cfg).value, ell) == 1)


def test_psi_solve_examples():
    cfg = TwoParamConfig(2, 3, 1, 2)
    assert tp.psi_solve(cfg, (0,), (0,)) == ((0,), (0,))
    c, chi = tp.psi_solve(cfg, (1,), (1,))
    hits = [(cc, xx) for cc in range(3) for xx in range(3)
            if tp.psi_forward(cfg, (cc,), (xx,)) == ((1,), (1,))]
    assert hits == [(c[0], chi[0])]


@settings(max_examples=100, deadline=None)
@given(configs(max_n=4, max_ell=11), st.data())
def test_psi_round_trip(cfg, data):
    assume(cfg.double_ok and cfg.rs_primitive and tp.factorization_bijective(cfg))
    vec = st.lists(st.integers(0, cfg.ell - 1), min_size=cfg.rank, max_size=cfg.rank)
    b, gamma = tuple(data.draw(vec)), tuple(data.draw(vec))
    c, chi = tp.psi_solve(cfg, b, gamma)
    assert tp.psi_forward(cfg, c, chi) == (b, gamma)


def test_psi_solve_fails_without_criterion():
    with pytest.raises(NonInvertible):
        tp.psi_solve(TwoParamConfig(2, 4, 1, 0), (1,), (1,))


def test_verify_psi_examples():
    assert tp.verify_psi_bijectivity(TwoParamConfig(2, 3, 1, 2))
    assert not tp.verify_psi_bijectivity(TwoParamConfig(2, 4, 1, 0))
    for cfg in tp.valid_configs(3, 5):
        if cfg.double_ok and cfg.rs_primitive:
            assert tp.verify_psi_bijectivity(cfg) == tp.factorization_bijective(cfg)
    with pytest.raises(TooLarge):
        tp.verify_psi_bijectivity(TwoParamConfig(3, 5, 1, 4), cap=100)
