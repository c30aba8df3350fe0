"""The acceptance suite: nine exact checks, each returning a pass/fail result.

Every check is restricted to its own parameter set intersected with the caps
(``max_ell``, ``max_n``, ``max_group``); ``FULL_CAPS`` reproduces the complete
suite.  Results carry the first failing case so a failure is reproducible.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from math import gcd

from . import rank_one as r1
from . import two_param as tp
from .errors import PreconditionFailed
from .hopf import Character, build_borel_sl2, build_HD, verify_hopf_axioms
from .yd import (SimpleParam, hom_yd, is_isomorphic, is_simple, one_dim_module, simple_cache,
                 socle, spin_simple, beta_action, tensor, twist, yd_compatibility_check)


@dataclass(frozen=True)
class Caps:
    max_ell: int = 5
    max_n: int = 3
    max_group: int = 6


DEFAULT_CAPS = Caps()
FULL_CAPS = Caps(max_ell=12, max_n=6, max_group=9)

DET_SEED = 20240601


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    cases: int
    budget_seconds: float | None
    seconds: float = 0.0
    failure: dict | None = None
    notes: dict = field(default_factory=dict)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        budget = f"budget {self.budget_seconds:.0f}s" if self.budget_seconds else "no budget"
        return (f"[{status}] criterion {self.number} {self.name}: {self.cases} cases, "
                f"{self.seconds:.2f}s ({budget})")

    @property
    def within_budget(self) -> bool:
        return self.budget_seconds is None or self.seconds <= self.budget_seconds

    def to_json(self, timing: bool = False) -> dict:
        return {"number": self.number, "name": self.name, "passed": self.passed,
                "cases": self.cases, "budget_seconds": self.budget_seconds,
                "seconds": f"{self.seconds:.3f}" if timing else None,
                "failure": self.failure, "notes": self.notes}


class _Run:
    def __init__(self):
        self.cases = 0
        self.failure = None
        self.notes: dict = {}

    def check(self, ok: bool, **case) -> bool:
        self.cases += 1
        if not ok and self.failure is None:
            self.failure = {k: _plain(v) for k, v in case.items()}
        return ok


def _plain(v):
    if isinstance(v, (str, int, float, bool)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if hasattr(v, "to_json"):
        return v.to_json()
    return repr(v)


def _borel_configs(ell: int):
    return [(y, z) for y in range(ell) for z in range(ell)
            if y != z and gcd((y - z) % ell, ell) == 1]


# ---------------------------------------------------------------------------


def criterion_1(caps: Caps) -> _Run:
    run = _Run()
    for ell in [e for e in (3, 4, 5) if e <= caps.max_ell]:
        for y, z in _borel_configs(ell):
            rep = verify_hopf_axioms(build_borel_sl2(ell, y, z))
            run.check(rep.passed, algebra="borel", ell=ell, y=y, z=z, report=rep.to_json())
    for data in r1.enumerate_data(min(caps.max_group, 8)):
        rep = verify_hopf_axioms(build_HD(data))
        run.check(rep.passed, algebra="H_D", data=data.to_json(), report=rep.to_json())
    return run


def _classify(run: _Run, H, label: dict):
    cache = simple_cache(H)
    mods = [cache.get(p) for p in cache.params]
    run.check(len(mods) == len(H.group) ** 2, count=len(mods), **label)
    for p, S in zip(cache.params, mods):
        run.check(yd_compatibility_check(S) and is_simple(S, cache)
                  and len(hom_yd(S, S)) == 1, param=p, **label)
    for i, S in enumerate(mods):
        for j, T in enumerate(mods):
            if i != j:
                run.check(not hom_yd(S, T), left=cache.params[i], right=cache.params[j], **label)


def criterion_2(caps: Caps) -> _Run:
    run = _Run()
    for ell in [e for e in (3, 5) if e <= caps.max_ell]:
        _classify(run, build_borel_sl2(ell, 1, ell - 1), {"algebra": "borel", "ell": ell})
    for orders in ((3,), (5,), (2, 2)):
        size = 1
        for m in orders:
            size *= m
        if size > caps.max_group or max(orders) > caps.max_ell:
            continue
        G = r1.AbelianGroup(orders)
        rejected = accepted = 0
        for a in G.elements:
            for chi in G.elements:
                try:
                    data = r1.RankOneData(orders, a, chi)
                except PreconditionFailed:
                    rejected += 1
                    e = G.exponent
                    run.check(G.pairing_exponent(chi, a) % e == 0, rejected=[a, chi])
                    continue
                accepted += 1
                _classify(run, build_HD(data), {"algebra": "H_D", "data": data.to_json()})
        run.notes[repr(G)] = {"accepted": accepted, "rejected": rejected}
    return run


def criterion_3(caps: Caps) -> _Run:
    run = _Run()
    for ell in [e for e in (3, 5) if e <= caps.max_ell]:
        H = build_borel_sl2(ell, 1, ell - 1)
        cfg = tp.TwoParamConfig(2, ell, 1, ell - 1)
        f = H.basis(H.generators["f"])
        for c in range(ell):
            beta = Character((ell,), tp.beta_of_g(cfg, (c,)))
            S = spin_simple(H, SimpleParam(beta, (c,)))
            r = 2 * c % ell
            run.check(S.dim == r + 1, ell=ell, c=c, dim=S.dim)
            v = H.basis(H.grouplike_index((c,)))
            for _ in range(r):
                v = beta_action(H, beta, f, v)
            nonzero = bool(v)
            v = beta_action(H, beta, f, v)
            run.check(nonzero and not v, ell=ell, c=c, statement="f^r.g != 0 and f^(r+1).g = 0")
    return run


def criterion_4(caps: Caps) -> _Run:
    run = _Run()
    for n in [m for m in (2, 3) if m <= caps.max_n]:
        for ell in range(2, min(7, caps.max_ell) + 1):
            for cfg in tp.valid_configs(n, ell):
                if not (cfg.double_ok and cfg.rs_primitive):
                    continue
                brute = tp.verify_psi_bijectivity(cfg)
                run.check(brute == (gcd((cfg.y - cfg.z) * n, ell) == 1)
                          and brute == tp.factorization_bijective(cfg), cfg=cfg)
    return run


def criterion_5(caps: Caps) -> _Run:
    run = _Run()
    rng = random.Random(DET_SEED)
    for n in range(2, min(6, caps.max_n) + 1):
        for _ in range(50):
            ell = rng.randint(2, min(12, caps.max_ell))
            y = rng.randrange(ell)
            z = rng.choice([v for v in range(ell) if v != y])
            cfg = tp.TwoParamConfig(n, ell, y, z)
            lhs = tp.det_A_plus_At(cfg)
            run.check(lhs == ((y - z) ** (n - 1) * n) % ell, cfg=cfg, det=lhs.value)
    return run


def criterion_6(caps: Caps) -> _Run:
    run = _Run()
    for ell in [e for e in (3, 5) if e <= min(caps.max_ell, caps.max_group)]:
        data = r1.RankOneData((ell,), (1,), (1,))
        H = build_HD(data)
        cache = simple_cache(H)
        for p in cache.params:
            fs = r1.factor_simple(data, p.beta.exps, p.g)
            Q = cache.get(SimpleParam(data.character(fs.quotient_beta), fs.quotient_g))
            K = cache.get(SimpleParam(data.character(fs.k_beta), fs.k_g))
            ok = (K.dim == 1 and r1.is_quotient_param(data, fs.quotient_beta, fs.quotient_g)
                  and is_isomorphic(cache.get(p), tensor(Q, K)))
            run.check(ok, data=data.to_json(), param=p, factor=fs.to_json())
    if caps.max_group >= 6:
        for chi in (1, 2):
            data = r1.RankOneData((6,), (1,), (chi,))
            run.check(not r1.factorization_bijective(data) and not r1.parameter_map_bijective(data),
                      data=data.to_json())
    return run


def _oracle_borel(run: _Run, ell: int):
    H = build_borel_sl2(ell, 1, ell - 1)
    cache = simple_cache(H)
    for p in cache.params:
        for q in cache.params:
            M = tensor(cache.get(p), cache.get(q))
            soc = socle(M, cache)
            d = r1.chen_predict(ell, (p.g[0], p.beta.exps[0]), (q.g[0], q.beta.exps[0]))
            _compare(run, M, soc, d, cache, algebra="borel", ell=ell, left=p, right=q)


def _oracle_rank_one(run: _Run, ell: int):
    data = r1.RankOneData((ell,), (1,), (1,))
    H = build_HD(data)
    cache = simple_cache(H)
    for p in cache.params:
        for q in cache.params:
            M = tensor(cache.get(p), cache.get(q))
            soc = socle(M, cache)
            d = r1.predict_tensor(data, (p.beta.exps, p.g), (q.beta.exps, q.g))
            _compare(run, M, soc, d, cache, algebra="H_D", ell=ell, left=p, right=q)


def _compare(run, M, soc, d, cache, **case):
    complete = soc.dim == M.dim
    ok = (soc.multiset() == d.multiset()
          and complete == (d.mode == r1.COMPLETE)
          and (d.mode != r1.SOCLE_ONLY or soc.dim < M.dim)
          and soc.dims(cache) == sorted(d.dims, reverse=True))
    run.check(ok, predicted=d.to_json(), socle=soc.to_json(), socle_dim=soc.dim,
              tensor_dim=M.dim, **case)


def criterion_7(caps: Caps) -> _Run:
    run = _Run()
    for ell in [e for e in (3, 5) if e <= caps.max_ell]:
        _oracle_borel(run, ell)
        if ell <= caps.max_group:
            _oracle_rank_one(run, ell)
    return run


def _one_dim_params(cache) -> list[SimpleParam]:
    return [p for p in cache.params if cache.get(p).dim == 1]


def _twist_laws(run: _Run, H, label: dict):
    cache = simple_cache(H)
    G = H.group
    gammas = _one_dim_params(cache)
    for p in cache.params:
        for q in cache.params:
            M = tensor(cache.get(p), cache.get(q))
            soc = socle(M, cache)
            simple = is_simple(M, cache)
            for gam in gammas:
                beta, g = gam.beta, gam.g
                Mg = twist(M, beta, g)
                back = twist(Mg, beta.inverse(), G.inv(g))
                same = back.gen_action == M.gen_action and back.coaction == M.coaction
                soc_g = socle(Mg, cache)
                soc_tw = twist(soc.module, beta, g)
                ok = (same and yd_compatibility_check(Mg)
                      and soc_g.vectors == soc.vectors
                      and soc_g.multiset() == sorted(((p2.beta * beta).exps, G.mul(p2.g, g))
                                                     for p2 in soc.params)
                      and is_simple(Mg, cache) == simple
                      and soc_tw.gen_action == soc_g.module.gen_action
                      and soc_tw.coaction == soc_g.module.coaction)
                run.check(ok, left=p, right=q, gamma=gam, **label)


def criterion_8(caps: Caps) -> _Run:
    run = _Run()
    if caps.max_ell >= 3:
        _twist_laws(run, build_borel_sl2(3, 1, 2), {"algebra": "borel", "ell": 3})
        if caps.max_group >= 3:
            _twist_laws(run, build_HD(r1.RankOneData((3,), (1,), (1,))), {"algebra": "H_D", "ell": 3})
    return run


def criterion_9(caps: Caps) -> _Run:
    run = _Run()
    for n in range(2, min(4, caps.max_n) + 1):
        for ell in range(2, caps.max_ell + 1):
            for cfg in tp.valid_configs(n, ell):
                if not cfg.double_ok:
                    continue
                gc = tp.central_subgroup(cfg)
                ok = len(gc) == ell ** (n - 1) and tp.dim_u(cfg) // len(gc) == ell ** (n * n - 1)
                if ell ** (2 * (n - 1)) <= 10**4:
                    scan = tp.central_subgroup_by_scan(cfg)
                    ok = ok and sorted(scan, key=_gl_key) == sorted(gc, key=_gl_key)
                run.check(ok, cfg=cfg, central=len(gc))
    for data in r1.enumerate_data(caps.max_group):
        if r1.factorization_bijective(data):
            run.check(r1.quotient_dimension(data) == data.ell ** 3, data=data.to_json())
    return run


def _gl_key(g):
    return (g.a_exp, g.b_exp)


CRITERIA = [
    (1, "hopf_axioms", 30, criterion_1),
    (2, "classification", 120, criterion_2),
    (3, "dimension_formula", None, criterion_3),
    (4, "psi_bijectivity", 60, criterion_4),
    (5, "determinant_identity", None, criterion_5),
    (6, "decomposition", 120, criterion_6),
    (7, "tensor_socle_oracle", 600, criterion_7),
    (8, "twist_laws", None, criterion_8),
    (9, "quotient_dimension", None, criterion_9),
]


def run_criterion(number: int, caps: Caps = FULL_CAPS) -> CriterionResult:
    num, name, budget, fn = CRITERIA[number - 1]
    t = time.perf_counter()
    try:
        run = fn(caps)
    except Exception as exc:  # a crash inside a sweep is a failed criterion, not a usage error
        run = _Run()
        run.failure = {"exception": f"{type(exc).__name__}: {exc}"}
    elapsed = time.perf_counter() - t
    return CriterionResult(num, name, run.failure is None and run.cases > 0, run.cases, budget,
                           elapsed, run.failure, run.notes)


def run_all(caps: Caps = FULL_CAPS, stop_on_failure: bool = False) -> list[CriterionResult]:
    out = []
    for num, *_ in CRITERIA:
        res = run_criterion(num, caps)
        out.append(res)
        if stop_on_failure and not res.passed:
            break
    return out
