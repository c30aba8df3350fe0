"""Parameter-level theory of rank-one data D = (G, chi, a) and their doubles.

Group-likes of the double are pairs ``(g, gamma)`` in ``G x Gamma`` where
``Gamma`` is the character group of ``G``; both are stored as exponent vectors
against the cyclic presentation of ``G``.  Characters evaluate as
``chi(gen_i) = zeta_{m_i}^{chi_i}`` inside Q(zeta_e), ``e = exp(G)``.

Coset representatives are powers of ``a^-1 chi``; the opposite convention
``(a chi^-1)^c`` is converted with ``c -> -c`` where it appears.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, lcm
from typing import Sequence

from .errors import NoSuchR, PreconditionFailed, TooLarge
from .hopf import AbelianGroup, Character
from .zmod import Residue

ENUMERATION_CAP = 10**6

COMPLETE = "COMPLETE"
SOCLE_ONLY = "SOCLE_ONLY"
UNSPECIFIED = "UNSPECIFIED"


def _vec(x) -> tuple[int, ...]:
    if isinstance(x, Character):
        return x.exps
    return tuple(int(v) for v in x)


@dataclass(frozen=True)
class DoubleGroupLike:
    """The group-like ``g gamma`` of the double, ``g`` in G and ``gamma`` in Gamma."""

    g_exp: tuple[int, ...]
    gamma_exp: tuple[int, ...]

    def to_json(self) -> dict:
        return {"g": list(self.g_exp), "gamma": list(self.gamma_exp)}


class RankOneData:
    """Data D = (G, chi, a) with G = Z_{m_1} x ... x Z_{m_k}.

    Derived: ``ell = |chi(a)|``, ``N = |a|``, ``M = |chi|``.  Data with
    ``ell < 2`` are rejected since then x = 0 and H_D collapses to kG.
    """

    def __init__(self, cyclic_orders: Sequence[int], a_exp: Sequence[int],
                 chi_exp: Sequence[int]):
        self.group = G = AbelianGroup(cyclic_orders)
        self.cyclic_orders = G.orders
        self.a_exp = G.reduce(a_exp)
        self.chi_exp = G.reduce(chi_exp)
        e = G.exponent
        self.chi_a_exp = G.pairing_exponent(self.chi_exp, self.a_exp)
        self.ell = e // gcd(self.chi_a_exp, e)
        self.N = G.order_of(self.a_exp)
        self.M = G.order_of(self.chi_exp)
        if self.ell < 2:
            raise PreconditionFailed(f"chi(a) = 1 for {self!r}: need |chi(a)| >= 2",
                                     flag="ell_ge_2")
        assert self.N % self.ell == 0 and self.M % self.ell == 0

    def __repr__(self):
        return f"RankOneData(G={self.group!r}, a={self.a_exp}, chi={self.chi_exp})"

    def __eq__(self, other):
        return (isinstance(other, RankOneData)
                and (self.cyclic_orders, self.a_exp, self.chi_exp)
                == (other.cyclic_orders, other.a_exp, other.chi_exp))

    def __hash__(self):
        return hash((self.cyclic_orders, self.a_exp, self.chi_exp))

    @property
    def chi(self) -> Character:
        return Character(self.cyclic_orders, self.chi_exp)

    def character(self, exps) -> Character:
        return Character(self.cyclic_orders, _vec(exps))

    def to_json(self) -> dict:
        return {"group": list(self.cyclic_orders), "a": list(self.a_exp),
                "chi": list(self.chi_exp), "ell": self.ell, "N": self.N, "M": self.M}

    # products in G x Gamma (Gamma has the same presentation as G)

    def dmul(self, p: DoubleGroupLike, q: DoubleGroupLike) -> DoubleGroupLike:
        G = self.group
        return DoubleGroupLike(G.mul(p.g_exp, q.g_exp), G.mul(p.gamma_exp, q.gamma_exp))

    def dpow(self, p: DoubleGroupLike, k: int) -> DoubleGroupLike:
        G = self.group
        return DoubleGroupLike(G.power(p.g_exp, k), G.power(p.gamma_exp, k))

    def double(self, g, gamma) -> DoubleGroupLike:
        G = self.group
        return DoubleGroupLike(G.reduce(_vec(g)), G.reduce(_vec(gamma)))

    def all_double_grouplikes(self) -> list[DoubleGroupLike]:
        G = self.group
        if len(G) ** 2 > ENUMERATION_CAP:
            raise TooLarge(f"|G x Gamma| = {len(G) ** 2} exceeds {ENUMERATION_CAP}")
        return [DoubleGroupLike(g, h) for g in G.elements for h in G.elements]

    def simple_params(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        """All (beta, g) pairs, beta in Gamma and g in G, in lexicographic order."""
        G = self.group
        return [(b, g) for b in G.elements for g in G.elements]


def enumerate_data(max_group: int, min_ell: int = 2):
    """Every rank-one datum with |G| <= max_group over cyclic presentations.

    Presentations are products of cyclic groups with orders >= 2 in
    non-decreasing order; ``a`` and ``chi`` range over all exponent vectors.
    """
    def presentations(limit, smallest):
        yield ()
        for m in range(smallest, limit + 1):
            for rest in presentations(limit // m, m):
                yield (m,) + rest

    out = []
    for orders in presentations(max_group, 2):
        if not orders:
            continue
        G = AbelianGroup(orders)
        for a in G.elements:
            for chi in G.elements:
                e = G.exponent
                k = G.pairing_exponent(chi, a)
                if e // gcd(k, e) >= min_ell:
                    out.append(RankOneData(orders, a, chi))
    return out


# ---------------------------------------------------------------------------
# K, K-perp and one-dimensional modules


def ev_exponent(data: RankOneData, p: DoubleGroupLike) -> Residue:
    """ev(g gamma) = chi^-1(g) gamma(a) as a power of zeta_{l'}, l' = |im ev|.

    Here ``zeta_{l'} = zeta_e^(e / l')``; the result is a Residue mod ``l'``.
    """
    G = data.group
    e = G.exponent
    k = (-G.pairing_exponent(data.chi_exp, p.g_exp) + G.pairing_exponent(p.gamma_exp, data.a_exp)) % e
    step = _ev_image_step(data)
    return Residue(k // step, e // step)


def _ev_image_step(data: RankOneData) -> int:
    # im ev is generated by the values chi(gen_i) and gen_i^*(a), i.e. by
    # zeta_e^step with step the gcd of their exponents and e
    G = data.group
    e = G.exponent
    step = e
    for i in range(len(G.orders)):
        gen = G.generator(i)
        step = gcd(step, G.pairing_exponent(data.chi_exp, gen), G.pairing_exponent(gen, data.a_exp))
    return step


def K_subgroup(data: RankOneData) -> list[DoubleGroupLike]:
    """The kernel of ev in G x Gamma, sorted by (g, gamma)."""
    return [p for p in data.all_double_grouplikes() if ev_exponent(data, p).value == 0]


def K_perp(data: RankOneData) -> list[DoubleGroupLike]:
    """The cyclic subgroup generated by a chi^-1, sorted by (g, gamma)."""
    gen = data.double(data.a_exp, data.group.inv(data.chi_exp))
    order = lcm(data.N, data.M)
    return sorted({data.dpow(gen, k) for k in range(order)},
                  key=lambda p: (p.g_exp, p.gamma_exp))


def is_quotient_param(data: RankOneData, beta, g) -> bool:
    """Whether the simple with parameter (beta, g) is a module over the quotient by K."""
    G = data.group
    g, beta = G.reduce(_vec(g)), G.reduce(_vec(beta))
    chi_inv = G.inv(data.chi_exp)
    for k in range(lcm(data.N, data.M)):
        if G.power(data.a_exp, k) == g and G.power(chi_inv, k) == beta:
            return True
    return False


def is_one_dim_param(data: RankOneData, alpha: DoubleGroupLike) -> bool:
    return ev_exponent(data, alpha).value == 0


def one_dim_param(data: RankOneData, alpha: DoubleGroupLike):
    """(beta_alpha, g_alpha) of the one-dimensional module attached to alpha in K."""
    if not is_one_dim_param(data, alpha):
        raise PreconditionFailed(f"{alpha} is not in K", flag="in_K")
    return alpha.gamma_exp, alpha.g_exp


def factorization_bijective(data: RankOneData) -> bool:
    return data.ell % 2 == 1 and data.ell == data.M == data.N


def quotient_dimension(data: RankOneData) -> int:
    """dim D(H_D) / |K| = l^2 |G|^2 / |K|."""
    return data.ell ** 2 * len(data.group) ** 2 // len(K_subgroup(data))


def parameter_map_bijective(data: RankOneData) -> bool:
    """Whether (u, v) -> u v from K-perp x K onto G x Gamma is a bijection, by enumeration."""
    K = K_subgroup(data)
    Kp = K_perp(data)
    image = {data.dmul(u, v) for u in Kp for v in K}
    return len(Kp) * len(K) == len(data.group) ** 2 and len(image) == len(data.group) ** 2


# ---------------------------------------------------------------------------
# factorization and dimensions


def _require_bijective(data: RankOneData):
    if not factorization_bijective(data):
        raise PreconditionFailed(
            f"{data!r}: need l odd and l = M = N (l={data.ell}, M={data.M}, N={data.N})",
            flag="factorization_bijective")


def _ev_in_chi_a(data: RankOneData, p: DoubleGroupLike) -> int:
    """s mod l with ev(p) = chi(a)^s; requires im ev = <chi(a)>."""
    G = data.group
    e, ell = G.exponent, data.ell
    k = (-G.pairing_exponent(data.chi_exp, p.g_exp) + G.pairing_exponent(p.gamma_exp, data.a_exp)) % e
    unit = e // ell
    if k % unit:
        raise PreconditionFailed(f"ev({p}) is not a power of chi(a)", flag="factorization_bijective")
    q = data.chi_a_exp // unit  # chi(a) = zeta_l^q with q a unit mod l
    return (k // unit) * pow(q, -1, ell) % ell


def coset_exponent(data: RankOneData, p: DoubleGroupLike) -> Residue:
    """The unique c mod l with p (a^-1 chi)^-c in K."""
    _require_bijective(data)
    s = _ev_in_chi_a(data, p)
    # ev(a^-1 chi) = chi(a)^2
    return Residue(s * pow(2, -1, data.ell), data.ell)


def r_of_c(ell: int, c: int) -> int:
    return 2 * c % ell


def dim_simple(data: RankOneData, beta, g) -> int:
    c = coset_exponent(data, data.double(g, beta)).value
    return r_of_c(data.ell, c) + 1


@dataclass(frozen=True)
class FactoredSimple:
    c: int
    quotient_beta: tuple[int, ...]
    quotient_g: tuple[int, ...]
    k_part: DoubleGroupLike

    @property
    def k_beta(self) -> tuple[int, ...]:
        return self.k_part.gamma_exp

    @property
    def k_g(self) -> tuple[int, ...]:
        return self.k_part.g_exp

    def to_json(self) -> dict:
        return {"c": self.c,
                "quotient_part": {"beta": list(self.quotient_beta), "g": list(self.quotient_g)},
                "one_dim_part": {"beta": list(self.k_beta), "g": list(self.k_g)}}


def factor_simple(data: RankOneData, beta, g) -> FactoredSimple:
    """Split (beta, g) as quotient part (chi^c, a^-c) times a K-part (beta chi^-c, g a^c)."""
    G = data.group
    beta, g = G.reduce(_vec(beta)), G.reduce(_vec(g))
    c = coset_exponent(data, data.double(g, beta)).value
    k_part = DoubleGroupLike(G.mul(g, G.power(data.a_exp, c)),
                             G.mul(beta, G.power(data.chi_exp, -c)))
    assert is_one_dim_param(data, k_part)
    return FactoredSimple(c, G.power(data.chi_exp, c), G.power(data.a_exp, -c), k_part)


# ---------------------------------------------------------------------------
# predicted tensor decompositions


@dataclass(frozen=True)
class Summand:
    beta: tuple[int, ...]
    g: tuple[int, ...]
    dim: int

    def to_json(self) -> dict:
        return {"beta": list(self.beta), "g": list(self.g), "dim": self.dim}


@dataclass(frozen=True)
class Decomposition:
    """Predicted decomposition of a tensor of two simples.

    COMPLETE: the summands are the full decomposition.  SOCLE_ONLY: the
    summands are the socle and the tensor product is strictly larger.
    UNSPECIFIED: no prediction is made (even l in the Borel setting).
    """

    mode: str
    summands: tuple[Summand, ...]
    r: int
    r_prime: int
    t: int | None = None

    @property
    def dims(self) -> list[int]:
        return [s.dim for s in self.summands]

    def multiset(self) -> list[tuple]:
        return sorted((s.beta, s.g) for s in self.summands)

    def to_json(self) -> dict:
        return {"mode": self.mode, "r": self.r, "r_prime": self.r_prime, "t": self.t,
                "summands": [s.to_json() for s in self.summands]}


def _j_range(ell: int, r: int, rp: int):
    if r + rp < ell:
        return COMPLETE, None, range(0, min(r, rp) + 1)
    t = r + rp - ell + 1
    return SOCLE_ONLY, t, range((t + 1) // 2, min(r, rp) + 1)


def predict_tensor(data: RankOneData, left, right) -> Decomposition:
    """Decomposition (or socle) of H_D._beta g (x) H_D._beta' g' from parameters alone."""
    _require_bijective(data)
    G = data.group
    (beta, g), (betap, gp) = left, right
    beta, g, betap, gp = (G.reduce(_vec(v)) for v in (beta, g, betap, gp))
    ell = data.ell
    r = r_of_c(ell, coset_exponent(data, data.double(g, beta)).value)
    rp = r_of_c(ell, coset_exponent(data, data.double(gp, betap)).value)
    mode, t, js = _j_range(ell, r, rp)
    bb, gg = G.mul(beta, betap), G.mul(g, gp)
    summands = []
    for j in js:
        bj = G.mul(G.power(data.chi_exp, -j), bb)
        gj = G.mul(gg, G.power(data.a_exp, j))
        summands.append(Summand(bj, gj, dim_simple(data, bj, gj)))
    return Decomposition(mode, tuple(summands), r, rp, t)


def borel_r(ell: int, c: int, beta_exp: int) -> int:
    """Minimal r >= 0 with theta^beta = theta^(2(c - r)); raises NoSuchR if none exists."""
    for r in range(ell):
        if (2 * (c - r) - beta_exp) % ell == 0:
            return r
    raise NoSuchR(f"theta^{beta_exp % ell} is not of the form theta^(2(c-r)) for l = {ell}")


def chen_predict(ell: int, left, right) -> Decomposition:
    """Borel-side prediction for (w'^c, beta) (x) (w'^c', beta') with beta(w') = theta^beta.

    Parameters are (c, beta_exp) pairs; summands report ``g`` and ``beta`` as
    one-element exponent tuples.  Odd l only; even l yields UNSPECIFIED.
    """
    (c, b), (cp, bp) = left, right
    r = borel_r(ell, c, b)
    rp = borel_r(ell, cp, bp)
    if ell % 2 == 0:
        return Decomposition(UNSPECIFIED, (), r, rp, None)
    mode, t, js = _j_range(ell, r, rp)
    summands = []
    for j in js:
        cj = (c + cp - j) % ell
        bj = (b + bp + 2 * j) % ell
        summands.append(Summand((bj,), (cj,), borel_r(ell, cj, bj) + 1))
    return Decomposition(mode, tuple(summands), r, rp, t)


# ---------------------------------------------------------------------------
# correspondence with u_theta(sl_2)


@dataclass(frozen=True)
class BorelParam:
    """Borel simple parameter: g = w'^d and beta(w') = theta^beta_exp.

    ``theta_exp`` records theta as a power of chi(a).
    """

    d: int
    beta_exp: int
    theta_exp: int

    def to_json(self) -> dict:
        return {"d": self.d, "beta": self.beta_exp, "theta_in_chi_a": self.theta_exp}


def psi_module_correspondence(data: RankOneData, c: int) -> BorelParam:
    """The Borel parameter matching H_D._{chi^-c} a^c: d = -c and beta(w') = theta^(2c).

    ``theta = chi(a)^(-1/2)`` with 1/2 taken mod l.
    """
    _require_bijective(data)
    ell = data.ell
    return BorelParam(-c % ell, 2 * c % ell, -pow(2, -1, ell) % ell)


def all_pairs(items):
    return list(itertools.product(items, repeat=2))
