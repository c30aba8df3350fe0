"""Residue-level criteria for the restricted two-parameter quantum groups u_{r,s}(sl_n).

With ``r = theta^y`` and ``s = theta^z`` everything reduces to exponent
arithmetic mod l.  Group-likes are ``w_1^{a_1}...w_{n-1}^{a_{n-1}} w'_1^{b_1}...``
and simple parameters are pairs ``(beta, c)`` with ``beta(w'_i) = theta^{beta_i}``
and ``g = prod w'_i^{c_i}``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

from .errors import PreconditionFailed, TooLarge
from .zmod import Residue, ResidueMatrix, det_mod, invert_mod, solve_mod

SWEEP_CAP = 10**7


@dataclass(frozen=True)
class TwoParamConfig:
    """Parameters (n, l, y, z) with y, z canonicalized mod l and y != z."""

    n: int
    ell: int
    y: int
    z: int
    double_ok: bool = field(init=False)
    rs_primitive: bool = field(init=False)

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be >= 2")
        if self.ell < 2:
            raise ValueError("l must be >= 2")
        object.__setattr__(self, "y", int(self.y) % self.ell)
        object.__setattr__(self, "z", int(self.z) % self.ell)
        if self.y == self.z:
            raise ValueError("need r != s, i.e. y != z mod l")
        object.__setattr__(self, "double_ok", gcd(alt_det(self).value, self.ell) == 1)
        object.__setattr__(self, "rs_primitive", gcd((self.y - self.z) % self.ell, self.ell) == 1)

    @property
    def rank(self) -> int:
        return self.n - 1

    def to_json(self) -> dict:
        return {"n": self.n, "ell": self.ell, "y": self.y, "z": self.z,
                "double_ok": self.double_ok, "rs_primitive": self.rs_primitive}


@dataclass(frozen=True)
class GroupLikeU:
    a_exp: tuple[int, ...]
    b_exp: tuple[int, ...]


@dataclass(frozen=True)
class SimpleParamU:
    beta_exp: tuple[int, ...]
    c_exp: tuple[int, ...]


def valid_configs(n: int, ell: int):
    """All configurations (n, l, y, z) with y != z mod l."""
    return [TwoParamConfig(n, ell, y, z) for y in range(ell) for z in range(ell) if y != z]


def _require(cfg: TwoParamConfig, *flags: str):
    for flag in flags:
        if not getattr(cfg, flag):
            raise PreconditionFailed(f"{flag} fails for {cfg}", flag=flag)


def _vec(cfg: TwoParamConfig, v: Sequence[int]) -> tuple[int, ...]:
    v = tuple(int(x) % cfg.ell for x in v)
    if len(v) != cfg.rank:
        raise ValueError(f"expected a vector of length {cfg.rank}, got {len(v)}")
    return v


def build_A(cfg: TwoParamConfig) -> ResidueMatrix:
    """Tridiagonal matrix: y - z on the diagonal, z above it, -y below it."""
    m = cfg.rank
    rows = [[0] * m for _ in range(m)]
    for i in range(m):
        rows[i][i] = cfg.y - cfg.z
        if i + 1 < m:
            rows[i][i + 1] = cfg.z
            rows[i + 1][i] = -cfg.y
    return ResidueMatrix.from_rows(rows, cfg.ell)


def alt_det(cfg: TwoParamConfig) -> Residue:
    n, y, z = cfg.n, cfg.y, cfg.z
    return Residue(sum((-1) ** k * y ** (n - 1 - k) * z ** k for k in range(n)), cfg.ell)


def is_double(cfg: TwoParamConfig) -> bool:
    return cfg.double_ok


def _A_inv(cfg: TwoParamConfig) -> ResidueMatrix:
    _require(cfg, "double_ok")
    return invert_mod(build_A(cfg))


def central_b_from_a(cfg: TwoParamConfig, a_exp) -> tuple[int, ...]:
    """b = A^-1 A^t a, the unique b making (a, b) central."""
    A = build_A(cfg)
    return (invert_mod(A) @ A.transpose()).apply(_vec(cfg, a_exp))


def is_central_pair(cfg: TwoParamConfig, g: GroupLikeU) -> bool:
    a, b = _vec(cfg, g.a_exp), _vec(cfg, g.b_exp)
    y, z, m = cfg.y, cfg.z, cfg.rank

    def at(v, k):
        return v[k] if 0 <= k < m else 0

    return all(
        (z * at(a, k - 1) + (y - z) * a[k] - y * at(a, k + 1)
         - (-y * at(b, k - 1) + (y - z) * b[k] + z * at(b, k + 1))) % cfg.ell == 0
        for k in range(m))


def central_subgroup(cfg: TwoParamConfig) -> list[GroupLikeU]:
    _require(cfg, "double_ok")
    A = build_A(cfg)
    B = invert_mod(A) @ A.transpose()
    return [GroupLikeU(a, B.apply(a)) for a in itertools.product(range(cfg.ell), repeat=cfg.rank)]


def central_subgroup_by_scan(cfg: TwoParamConfig) -> list[GroupLikeU]:
    """All central group-likes, by testing every (a, b) pair."""
    if cfg.ell ** (2 * cfg.rank) > SWEEP_CAP:
        raise TooLarge("central pair scan exceeds the sweep cap")
    vecs = list(itertools.product(range(cfg.ell), repeat=cfg.rank))
    return [GroupLikeU(a, b) for a in vecs for b in vecs if is_central_pair(cfg, GroupLikeU(a, b))]


def dim_u(cfg: TwoParamConfig) -> int:
    """dim u_{r,s}(sl_n) = l^((n-1)(n+2)): l^{n(n-1)/2} each for E, F and l^{2(n-1)} for the group."""
    n = cfg.n
    return cfg.ell ** (n * (n - 1) // 2 * 2 + 2 * (n - 1))


def dim_quotient(cfg: TwoParamConfig) -> int:
    """dim of u modulo the ideal generated by the central group-likes."""
    return dim_u(cfg) // len(central_subgroup(cfg))


def beta_of_g(cfg: TwoParamConfig, c_exp) -> tuple[int, ...]:
    """beta = -A^t c, the character needed for H ._beta g to factor through the quotient."""
    return build_A(cfg).transpose().scale(-1).apply(_vec(cfg, c_exp))


def g_of_chi(cfg: TwoParamConfig, chi_exp) -> tuple[int, ...]:
    """d = A^-1 chi, so that k_chi is H ._{chi|H} g_chi with g_chi = prod w'_i^{d_i}."""
    return _A_inv(cfg).apply(_vec(cfg, chi_exp))


def pair_w_exponent(cfg: TwoParamConfig, i: int, c_exp) -> Residue:
    """e with w_i . g = theta^e g for g = prod w'_j^{c_j} (indices from 0)."""
    _require(cfg, "rs_primitive", "double_ok")
    c = _vec(cfg, c_exp)
    m = cfg.rank

    def at(k):
        return c[k] if 0 <= k < m else 0

    return Residue(-cfg.y * at(i - 1) + (cfg.y - cfg.z) * c[i] + cfg.z * at(i + 1), cfg.ell)


def factorization_bijective(cfg: TwoParamConfig) -> bool:
    _require(cfg, "double_ok", "rs_primitive")
    return gcd((cfg.y - cfg.z) * cfg.n % cfg.ell, cfg.ell) == 1


def det_A_plus_At(cfg: TwoParamConfig) -> Residue:
    A = build_A(cfg)
    return det_mod(A + A.transpose())


def psi_block_matrix(cfg: TwoParamConfig) -> ResidueMatrix:
    """[[Id, A^-1], [-A^t, Id]] acting on (c, chi)."""
    m, ell = cfg.rank, cfg.ell
    I = ResidueMatrix.identity(m, ell)
    return ResidueMatrix.block([[I, _A_inv(cfg)], [build_A(cfg).transpose().scale(-1), I]])


def psi_solve(cfg: TwoParamConfig, b_exp, gamma_exp) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The unique (c, chi) with c + A^-1 chi = b and -A^t c + chi = gamma."""
    b, gamma = _vec(cfg, b_exp), _vec(cfg, gamma_exp)
    x = solve_mod(psi_block_matrix(cfg), b + gamma)
    m = cfg.rank
    return x[:m], x[m:]


def psi_forward(cfg: TwoParamConfig, c_exp, chi_exp) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(c, chi) -> (c + A^-1 chi, -A^t c + chi), i.e. (g g_chi, beta_g chi|H)."""
    c, chi = _vec(cfg, c_exp), _vec(cfg, chi_exp)
    d = g_of_chi(cfg, chi)
    beta = beta_of_g(cfg, c)
    ell = cfg.ell
    return (tuple((u + v) % ell for u, v in zip(c, d)),
            tuple((u + v) % ell for u, v in zip(beta, chi)))


def verify_psi_bijectivity(cfg: TwoParamConfig, cap: int = SWEEP_CAP) -> bool:
    """Exhaustively check whether psi_forward is a bijection of (Z/l)^{2(n-1)}."""
    _require(cfg, "double_ok", "rs_primitive")
    total = cfg.ell ** (2 * cfg.rank)
    if total > cap:
        raise TooLarge(f"{total} parameter pairs exceed the cap {cap}")
    m, ell = cfg.rank, cfg.ell
    A = build_A(cfg)
    A_inv = invert_mod(A)
    neg_At = A.transpose().scale(-1)
    vecs = list(itertools.product(range(ell), repeat=m))
    ds = {chi: A_inv.apply(chi) for chi in vecs}
    betas = {c: neg_At.apply(c) for c in vecs}
    seen = set()
    for c in vecs:
        beta = betas[c]
        for chi in vecs:
            d = ds[chi]
            img = (tuple((u + v) % ell for u, v in zip(c, d)),
                   tuple((u + v) % ell for u, v in zip(beta, chi)))
            if img in seen:
                return False
            seen.add(img)
    return True
