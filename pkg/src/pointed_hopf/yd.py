"""Yetter-Drinfel'd modules over a finite Hopf algebra and Radford's simples.

A module stores one action matrix per algebra generator of the parent; the
matrix of any basis element is the product along its generator word.  The
coaction is ``coaction[j] = {(m, k): c}`` meaning ``delta(v_j) = sum c v_m (x) b_k``.

Compatibility convention: ``sum h1.m0 (x) h2 m1 = sum (h2.m)0 (x) (h2.m)1 h1``;
tensor products carry ``delta(m (x) n) = m0 (x) n0 (x) n1 m1``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Sequence, Union

from . import linalg
from .cyclotomic import CycElem
from .errors import NotSimple
from .hopf import Character, HopfAlgebra, antipode_inverse, character_value
from .linalg import EchelonBasis, Matrix, SparseVec, axpy


@dataclass(frozen=True)
class SimpleParam:
    """Parameter (beta, g) of the simple H ._beta g; ``g`` is an exponent vector in G(H)."""

    beta: Character
    g: tuple[int, ...]

    def g_index(self, H: HopfAlgebra) -> int:
        return H.grouplike_index(self.g)

    def key(self) -> tuple:
        return (self.beta.exps, self.g)

    def to_json(self) -> dict:
        return {"beta": list(self.beta.exps), "g": list(self.g)}

    def __repr__(self):
        return f"SimpleParam(beta={self.beta.exps}, g={self.g})"


def simple_params(H: HopfAlgebra) -> list[SimpleParam]:
    """All |G|^2 parameters, ordered by (beta, g)."""
    G = H.group
    return [SimpleParam(Character(G.orders, b), g) for b in G.elements for g in G.elements]


class YDModule:
    """A finite-dimensional Yetter-Drinfel'd module over ``parent``."""

    def __init__(self, parent: HopfAlgebra, dim: int, gen_action: dict[str, Matrix],
                 coaction: list[dict], basis_in_H: list[SparseVec] | None = None,
                 param: SimpleParam | None = None, name: str = ""):
        self.parent = parent
        self.dim = dim
        self.gen_action = gen_action
        self.coaction = coaction
        self.basis_in_H = basis_in_H
        self.param = param
        self.name = name
        self._act_cache: dict[int, Matrix] = {}
        self._weights = None

    def __repr__(self):
        return f"YDModule({self.name or '?'}, dim={self.dim})"

    @property
    def field(self):
        return self.parent.field

    def action_matrix(self, k: int) -> Matrix:
        """Matrix of b_k, the product of generator matrices along its word."""
        m = self._act_cache.get(k)
        if m is None:
            m = linalg.identity(self.field, self.dim)
            for s in reversed(self.parent.words[k]):
                m = linalg.mat_mul(self.gen_action[s], m)
            self._act_cache[k] = m
        return m

    def act(self, h: SparseVec, v: SparseVec) -> SparseVec:
        out: SparseVec = {}
        for k, c in h.items():
            axpy(out, c, linalg.mat_vec(self.action_matrix(k), v))
        return out

    def coact(self, v: SparseVec) -> dict:
        """delta(v) as {(m, k): c}."""
        out: dict = {}
        for j, c in v.items():
            axpy(out, c, self.coaction[j])
        return out

    def dual_operator(self, f: Callable[[int], CycElem]) -> Matrix:
        """Matrix of m -> sum f(m1) m0 for a linear functional given on H-basis indices."""
        cols = []
        for j in range(self.dim):
            col: SparseVec = {}
            for (m, k), c in self.coaction[j].items():
                val = f(k)
                if val:
                    axpy(col, c * val, {m: self.field.one})
            cols.append(col)
        return cols

    def weights(self):
        """Per-basis-vector joint eigenvalues of the group generators and of the
        characters of G acting dually; None unless all these operators are diagonal."""
        if self._weights is None:
            H = self.parent
            G = H.group
            ops = []
            for t in range(len(G.orders)):
                ops.append(self.action_matrix(H.grouplike_index(G.generator(t))))
            for t in range(len(G.orders)):
                gamma = Character(G.orders, G.generator(t))
                ops.append(self.dual_operator(lambda k, gamma=gamma: character_value(H, gamma, k)))
            diags = [linalg.diagonal_entries(op) for op in ops]
            if any(d is None for d in diags):
                self._weights = False
            else:
                self._weights = [tuple(d[j] for d in diags) for j in range(self.dim)]
        return self._weights or None

    def to_json(self) -> dict:
        return module_descriptor(self)


# ---------------------------------------------------------------------------
# Radford's beta-action and the simples H ._beta g


def beta_action(H: HopfAlgebra, beta: Character, h: SparseVec, a: SparseVec) -> SparseVec:
    """h ._beta a = sum beta(h2) h3 a S^-1(h1)."""
    s_inv = antipode_inverse(H)
    out: SparseVec = {}
    for k, ck in h.items():
        for (i, j, l), c in H.delta2(k).items():
            bj = character_value(H, beta, j)
            if not bj:
                continue
            term = H.multiply(H.multiply(H.basis(l), a), s_inv[i])
            axpy(out, ck * c * bj, term)
    return out


def _coaction_in_basis(H: HopfAlgebra, eb: EchelonBasis, basis: list[SparseVec]) -> list[dict]:
    """Express Delta(v) in (module basis) (x) (H basis); raises if not a left coideal."""
    coaction = []
    for v in basis:
        legs: dict[int, SparseVec] = {}
        for (i, j), c in H.comultiply(v).items():
            legs.setdefault(j, {})[i] = c
        entry: dict = {}
        for j, w in legs.items():
            coords = eb.coordinates(w)
            for m, x in enumerate(coords):
                if x:
                    entry[(m, j)] = x
        coaction.append(entry)
    return coaction


def _module_from_subspace(H: HopfAlgebra, eb: EchelonBasis, act: Callable[[str, SparseVec], SparseVec],
                          param=None, name="") -> YDModule:
    basis = eb.vectors()
    gen_action = {}
    for s in H.generators:
        cols = []
        for v in basis:
            coords = eb.coordinates(act(s, v))
            cols.append({m: x for m, x in enumerate(coords) if x})
        gen_action[s] = cols
    return YDModule(H, len(basis), gen_action, _coaction_in_basis(H, eb, basis),
                    basis_in_H=basis, param=param, name=name)


def spin_simple(H: HopfAlgebra, param: SimpleParam) -> YDModule:
    """The submodule H ._beta g of H_beta, closed under the generators' beta-actions."""
    beta = param.beta
    gens = {s: H.basis(k) for s, k in H.generators.items()}
    eb = EchelonBasis(H.field)
    start = H.basis(param.g_index(H))
    eb.add(start)
    queue = [start]
    while queue:
        v = queue.pop()
        for s in gens.values():
            w = beta_action(H, beta, s, v)
            if w and eb.add(w):
                queue.append(w)

    def act(s, v):
        return beta_action(H, beta, gens[s], v)

    return _module_from_subspace(H, eb, act, param=param,
                                 name=f"S(beta={beta.exps},g={param.g})")


def regular_beta_module(H: HopfAlgebra, beta: Character) -> YDModule:
    """H_beta: all of H with the beta-action and Delta as coaction."""
    eb = EchelonBasis(H.field)
    for k in range(H.dim):
        eb.add(H.basis(k))
    gens = {s: H.basis(k) for s, k in H.generators.items()}
    return _module_from_subspace(H, eb, lambda s, v: beta_action(H, beta, gens[s], v),
                                 name=f"H_beta({beta.exps})")


def one_dim_module(H: HopfAlgebra, beta: Character, g: Sequence[int]) -> YDModule:
    """The space k with h.1 = beta(h) and delta(1) = 1 (x) g."""
    gk = H.grouplike_index(g)
    gen_action = {s: [({0: character_value(H, beta, k)} if character_value(H, beta, k) else {})]
                  for s, k in H.generators.items()}
    return YDModule(H, 1, gen_action, [{(0, gk): H.field.one}],
                    param=SimpleParam(beta, H.group.reduce(g)),
                    name=f"k(beta={beta.exps},g={tuple(g)})")


# ---------------------------------------------------------------------------
# axioms


def module_check(M: YDModule) -> bool:
    """Generator matrices respect the relations: b_s . b_j acts as M_s A(b_j)."""
    H = M.parent
    for s, k in H.generators.items():
        ms = M.gen_action[s]
        for j in range(H.dim):
            lhs = linalg.mat_mul(ms, M.action_matrix(j))
            rhs = [dict() for _ in range(M.dim)]
            for t, c in H.mult[k][j].items():
                rhs = linalg.mat_add(rhs, linalg.mat_scale(M.action_matrix(t), c))
            if not linalg.mat_equal(lhs, rhs):
                return False
    return True


def comodule_check(M: YDModule) -> bool:
    """Coassociativity and counitality of the coaction."""
    H = M.parent
    one = M.field.one
    for j in range(M.dim):
        counit: SparseVec = {}
        for (m, k), c in M.coaction[j].items():
            e = H.counit[k]
            if e:
                axpy(counit, c * e, {m: one})
        if counit != {j: one}:
            return False
        left: dict = {}
        right: dict = {}
        for (m, k), c in M.coaction[j].items():
            for (p, q), d in M.coaction[m].items():
                axpy(left, c * d, {(p, q, k): one})
            for (a, b), d in H.comult[k].items():
                axpy(right, c * d, {(m, a, b): one})
        if left != right:
            return False
    return True


def _compat_sides(M: YDModule, k: int, j: int):
    H = M.parent
    one = M.field.one
    left: dict = {}
    for (a, b), c in H.comult[k].items():
        A = M.action_matrix(a)
        for (m, t), d in M.coaction[j].items():
            hm = A[m]
            if not hm:
                continue
            prod = H.mult[b][t]
            for p, x in hm.items():
                for q, y in prod.items():
                    axpy(left, c * d * x * y, {(p, q): one})
    right: dict = {}
    for (a, b), c in H.comult[k].items():
        v = M.action_matrix(b)[j]
        for (p, t), d in M.coact(v).items():
            for q, y in H.mult[t][a].items():
                axpy(right, c * d * y, {(p, q): one})
    return left, right


def yd_compatibility_check(M: YDModule, exhaustive: bool = False) -> bool:
    """Module, comodule and Yetter-Drinfel'd compatibility axioms, exactly.

    Compatibility is checked on the generators of H unless ``exhaustive``; the
    set of h satisfying it is a subalgebra, so generators suffice.
    """
    if not module_check(M) or not comodule_check(M):
        return False
    H = M.parent
    ks = range(H.dim) if exhaustive else sorted(set(H.generators.values()))
    for k in ks:
        for j in range(M.dim):
            left, right = _compat_sides(M, k, j)
            if left != right:
                return False
    return True


def dual_action(M: YDModule, f: Union[Character, dict, Callable], m: SparseVec) -> SparseVec:
    """f . m = sum <f, m1> m0 for a character, a dual-basis functional {k: value}, or a callable."""
    H = M.parent
    if isinstance(f, Character):
        fn = lambda k: character_value(H, f, k)  # noqa: E731
    elif isinstance(f, dict):
        zero = M.field.zero
        fn = lambda k: M.field(f.get(k, zero))  # noqa: E731
    else:
        fn = f
    out: SparseVec = {}
    for (p, k), c in M.coact(m).items():
        val = fn(k)
        if val:
            axpy(out, c * val, {p: M.field.one})
    return out


# ---------------------------------------------------------------------------
# constructions


def tensor(M: YDModule, N: YDModule) -> YDModule:
    """M (x) N with basis index i * dim N + j for m_i (x) n_j."""
    H = M.parent
    if N.parent is not H:
        raise ValueError("tensor of modules over different algebras")
    dn = N.dim
    gen_action = {}
    for s, k in H.generators.items():
        acc = [dict() for _ in range(M.dim * dn)]
        for (a, b), c in H.comult[k].items():
            acc = linalg.mat_add(acc, linalg.mat_scale(
                linalg.kron(M.action_matrix(a), N.action_matrix(b), dn), c))
        gen_action[s] = acc
    coaction = []
    for i in range(M.dim):
        for j in range(dn):
            entry: dict = {}
            for (p, k), c in M.coaction[i].items():
                for (q, l), d in N.coaction[j].items():
                    cd = c * d
                    for t, x in H.mult[l][k].items():
                        key = (p * dn + q, t)
                        val = cd * x
                        old = entry.get(key)
                        if old is None:
                            entry[key] = val
                        else:
                            new = old + val
                            if new:
                                entry[key] = new
                            else:
                                del entry[key]
            coaction.append(entry)
    return YDModule(H, M.dim * dn, gen_action, coaction, name=f"({M.name}) (x) ({N.name})")


def twist(M: YDModule, beta: Character, g: Sequence[int]) -> YDModule:
    """M_gamma for the one-dimensional module gamma = (beta, g): M (x) gamma on M's basis.

    Action h.'m = sum beta(h2) h1.m; coaction m0 (x) g m1.
    """
    H = M.parent
    gamma = one_dim_module(H, beta, g)
    if not yd_compatibility_check(gamma):
        raise ValueError(f"(beta={beta.exps}, g={tuple(g)}) is not a one-dimensional YD module")
    gk = H.grouplike_index(g)
    gen_action = {}
    for s, k in H.generators.items():
        acc = [dict() for _ in range(M.dim)]
        for (a, b), c in H.comult[k].items():
            val = character_value(H, beta, b)
            if val:
                acc = linalg.mat_add(acc, linalg.mat_scale(M.action_matrix(a), c * val))
        gen_action[s] = acc
    coaction = []
    for j in range(M.dim):
        entry: dict = {}
        for (m, t), c in M.coaction[j].items():
            for q, x in H.mult[gk][t].items():
                axpy(entry, c * x, {(m, q): H.field.one})
        coaction.append(entry)
    return YDModule(H, M.dim, gen_action, coaction, basis_in_H=M.basis_in_H,
                    name=f"({M.name})_twist(beta={beta.exps},g={tuple(g)})")


def direct_sum(M: YDModule, N: YDModule) -> YDModule:
    H = M.parent
    dm = M.dim
    gen_action = {}
    for s in H.generators:
        gen_action[s] = ([dict(c) for c in M.gen_action[s]]
                         + [{i + dm: x for i, x in c.items()} for c in N.gen_action[s]])
    coaction = ([dict(e) for e in M.coaction]
                + [{(m + dm, k): c for (m, k), c in e.items()} for e in N.coaction])
    return YDModule(H, dm + N.dim, gen_action, coaction, name=f"({M.name}) + ({N.name})")


def submodule(M: YDModule, vectors: Sequence[SparseVec], name: str = "") -> YDModule:
    """The YD submodule spanned by ``vectors`` (which must be stable); basis echelonized.

    ``basis_in_H`` of the result holds the basis as vectors of M.
    """
    eb = EchelonBasis(M.field)
    for v in vectors:
        if v:
            eb.add(v)
    basis = eb.vectors()
    gen_action = {}
    for s, mat in M.gen_action.items():
        cols = []
        for v in basis:
            coords = eb.coordinates(linalg.mat_vec(mat, v))
            cols.append({i: x for i, x in enumerate(coords) if x})
        gen_action[s] = cols
    coaction = []
    for v in basis:
        legs: dict[int, SparseVec] = {}
        for (m, k), c in M.coact(v).items():
            legs.setdefault(k, {})[m] = c
        entry = {}
        for k, w in legs.items():
            for i, x in enumerate(eb.coordinates(w)):
                if x:
                    entry[(i, k)] = x
        coaction.append(entry)
    return YDModule(M.parent, len(basis), gen_action, coaction, basis_in_H=basis, name=name)


# ---------------------------------------------------------------------------
# Hom spaces, socle, simplicity


def hom_yd(M: YDModule, N: YDModule) -> list[Matrix]:
    """Basis of the YD morphisms M -> N, each a column-sparse dim N x dim M matrix."""
    H = M.parent
    if N.parent is not H:
        raise ValueError("Hom between modules over different algebras")
    dm, dn = M.dim, N.dim
    wm, wn = M.weights(), N.weights()
    if wm is not None and wn is not None:
        # morphisms commute with the group action and its dual, both diagonal here
        support = [(p, q) for p in range(dn) for q in range(dm) if wn[p] == wm[q]]
    else:
        support = [(p, q) for p in range(dn) for q in range(dm)]
    if not support:
        return []
    var = {pq: i for i, pq in enumerate(support)}
    one = H.field.one
    rows = []

    def add_rows(eqs):
        for r in eqs.values():
            if r:
                rows.append(r)

    # Phi A_M(s) = A_N(s) Phi
    for s in H.generators:
        am, an = M.gen_action[s], N.gen_action[s]
        am_rows: dict[int, dict] = {}
        for q, col in enumerate(am):
            for t, x in col.items():
                am_rows.setdefault(t, {})[q] = x
        eqs: dict = {}
        for (p, t), vi in var.items():
            # Phi[p, t] contributes Phi[p, t] A_M[t, q] to entry (p, q)
            for q, x in am_rows.get(t, {}).items():
                axpy(eqs.setdefault((p, q), {}), x, {vi: one})
            # and -an[u, p] Phi[p, t] to entry (u, t)
            for u, x in an[p].items():
                axpy(eqs.setdefault((u, t), {}), -x, {vi: one})
        add_rows(eqs)

    # (Phi (x) id) delta_M(m_q) = delta_N(Phi m_q)
    # lhs: C_M[q][(t, k)] Phi[p, t] at key (q, p, k); rhs: Phi[p, q] C_N[p][(u, k)] at (q, u, k)
    eqs = {}
    by_leg_m: dict[int, list] = {}
    for q in range(dm):
        for (t, k), c in M.coaction[q].items():
            by_leg_m.setdefault(t, []).append((q, k, c))
    for (p, t), vi in var.items():
        for q, k, c in by_leg_m.get(t, ()):
            axpy(eqs.setdefault((q, p, k), {}), c, {vi: one})
    for (p, q), vi in var.items():
        for (u, k), c in N.coaction[p].items():
            axpy(eqs.setdefault((q, u, k), {}), -c, {vi: one})
    add_rows(eqs)

    sols = linalg.nullspace(H.field, rows, len(support))
    out = []
    for x in sols:
        cols = [dict() for _ in range(dm)]
        for vi, c in x.items():
            p, q = support[vi]
            cols[q][p] = c
        out.append(cols)
    return out


def is_isomorphic(M: YDModule, N: YDModule) -> bool:
    """Whether some YD morphism M -> N is invertible.

    Tries each Hom basis element, then fixed integer combinations of them.
    """
    if M.dim != N.dim:
        return False
    homs = hom_yd(M, N)
    if not homs:
        return False
    F = M.field

    def invertible(phi):
        return linalg.rank(F, phi) == M.dim

    if any(invertible(phi) for phi in homs):
        return True
    for weights in itertools.islice(itertools.product(range(1, 4), repeat=len(homs)), 64):
        acc = [dict() for _ in range(M.dim)]
        for w, phi in zip(weights, homs):
            acc = linalg.mat_add(acc, linalg.mat_scale(phi, F(w)))
        if invertible(acc):
            return True
    return False


class SimpleCache:
    """Memoized spin_simple for one parent algebra."""

    def __init__(self, H: HopfAlgebra):
        self.H = H
        self.params = simple_params(H)
        self._mods: dict[tuple, YDModule] = {}
        self._weight_of: dict | None = None

    def get(self, param: SimpleParam) -> YDModule:
        m = self._mods.get(param.key())
        if m is None:
            m = self._mods[param.key()] = spin_simple(self.H, param)
        return m

    def by_weight(self) -> dict:
        """Weight of the vector g inside H ._beta g, mapped to its parameter."""
        if self._weight_of is None:
            H = self.H
            G = H.group
            table = {}
            for p in self.params:
                w = tuple([H.field.root(p.beta.exponent_at(G.generator(t))) for t in range(len(G.orders))]
                          + [H.field.root(Character(G.orders, G.generator(t)).exponent_at(p.g))
                             for t in range(len(G.orders))])
                table[w] = p
            self._weight_of = table
        return self._weight_of


def simple_cache(H: HopfAlgebra) -> SimpleCache:
    """The SimpleCache attached to H, created on first use."""
    c = getattr(H, "_simple_cache", None)
    if c is None or c.H is not H:
        c = H._simple_cache = SimpleCache(H)
    return c


@dataclass
class Socle:
    module: YDModule
    vectors: list[SparseVec]
    params: list[SimpleParam]

    @property
    def dim(self) -> int:
        return self.module.dim

    def multiset(self) -> list[tuple]:
        return sorted(p.key() for p in self.params)

    def dims(self, cache: SimpleCache) -> list[int]:
        return sorted((cache.get(p).dim for p in self.params), reverse=True)

    def to_json(self) -> list[dict]:
        return [p.to_json() for p in sorted(self.params, key=SimpleParam.key)]


def socle(M: YDModule, cache: SimpleCache | None = None) -> Socle:
    """Sum of the images of all morphisms from the classified simples into M."""
    H = M.parent
    cache = cache or simple_cache(H)
    wm = M.weights()
    if wm is not None:
        table = cache.by_weight()
        candidates = sorted({table[w] for w in wm if w in table}, key=SimpleParam.key)
    else:
        candidates = cache.params
    eb = EchelonBasis(M.field)
    params: list[SimpleParam] = []
    for p in candidates:
        S = cache.get(p)
        homs = hom_yd(S, M)
        params.extend([p] * len(homs))
        for phi in homs:
            for col in phi:
                if col:
                    eb.add(col)
    vectors = eb.vectors()
    return Socle(submodule(M, vectors, name=f"Soc({M.name})"), vectors, params)


def is_simple(M: YDModule, cache: SimpleCache | None = None) -> bool:
    soc = socle(M, cache)
    return soc.dim == M.dim and len(soc.params) == 1


def identify_simple(M: YDModule, cache: SimpleCache | None = None) -> SimpleParam:
    soc = socle(M, cache)
    if soc.dim != M.dim or len(soc.params) != 1:
        raise NotSimple(f"{M!r} has socle of dim {soc.dim} with {len(soc.params)} simple summands")
    return soc.params[0]


def module_descriptor(M: YDModule, soc: Socle | None = None) -> dict:
    return {
        "parent": M.parent.name,
        "dim": M.dim,
        "param": M.param.to_json() if M.param else None,
        "socle": soc.to_json() if soc is not None else None,
    }


def socle_signature(soc: Socle) -> Counter:
    return Counter(p.key() for p in soc.params)
