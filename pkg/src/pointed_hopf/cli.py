"""Command-line front end: ``urs``, ``rank1`` and ``verify-all``.

Reports are JSON envelopes on stdout (``--pretty`` renders a plain table).
Exit codes: 0 success, 1 verification mismatch or failed criterion,
2 invalid arguments.  Timing is omitted unless ``--timing`` is given so that
repeated runs produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from . import acceptance
from . import rank_one as r1
from . import two_param as tp
from .errors import PointedHopfError, PreconditionFailed
from .hopf import build_HD
from .yd import SimpleParam, simple_cache, socle, tensor

PROVENANCE = "exact arithmetic over Z/lZ and Q(zeta_l); no floating point"

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# argument grammar


def parse_group(text: str) -> tuple[int, ...]:
    """'Z3' or 'Z2xZ4' to cyclic orders."""
    try:
        parts = text.replace("X", "x").split("x")
        orders = tuple(int(p.strip().lstrip("Zz")) for p in parts)
    except ValueError:
        raise UsageError(f"bad group {text!r}; expected e.g. Z3 or Z2xZ4") from None
    if any(m < 2 for m in orders):
        raise UsageError(f"cyclic orders must be >= 2 in {text!r}")
    return orders


def parse_element(text: str, orders: Sequence[int]) -> tuple[int, ...]:
    """Comma-separated exponents, or 'g<i>' for the i-th generator."""
    text = text.strip()
    k = len(orders)
    if text.startswith("g") and text[1:].isdigit():
        i = int(text[1:])
        if i >= k:
            raise UsageError(f"generator {text} out of range for {k} factors")
        return tuple(int(j == i) for j in range(k))
    try:
        exps = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"bad element {text!r}") from None
    if len(exps) != k:
        raise UsageError(f"element {text!r} needs {k} exponents")
    return tuple(e % m for e, m in zip(exps, orders))


def parse_param(text: str, data: r1.RankOneData):
    """'c=K' (the simple with parameter (chi^K, a^-K)) or 'beta=E:g=E'."""
    G = data.group
    fields = {}
    for part in text.split(":"):
        if "=" not in part:
            raise UsageError(f"bad simple {text!r}; use c=K or beta=E:g=E")
        key, val = part.split("=", 1)
        fields[key.strip()] = val.strip()
    if set(fields) == {"c"}:
        try:
            c = int(fields["c"])
        except ValueError:
            raise UsageError(f"bad coset exponent in {text!r}") from None
        return G.power(data.chi_exp, c), G.power(data.a_exp, -c)
    if set(fields) == {"beta", "g"}:
        return (parse_element(fields["beta"], G.orders), parse_element(fields["g"], G.orders))
    raise UsageError(f"bad simple {text!r}; use c=K or beta=E:g=E")


# ---------------------------------------------------------------------------
# commands


def cmd_urs(args) -> tuple[dict, int]:
    try:
        cfg = tp.TwoParamConfig(args.n, args.ell, args.y, args.z)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    res: dict = {"config": cfg.to_json(), "A": build_rows(tp.build_A(cfg)),
                 "alt_det": tp.alt_det(cfg).value,
                 "det_A_plus_At": tp.det_A_plus_At(cfg).value,
                 "dim_u": tp.dim_u(cfg)}
    if cfg.double_ok:
        gc = tp.central_subgroup(cfg)
        res["central_subgroup_order"] = len(gc)
        res["dim_quotient"] = tp.dim_u(cfg) // len(gc)
    else:
        res["central_subgroup_order"] = None
        res["dim_quotient"] = None
    code = EXIT_OK
    try:
        verdict = tp.factorization_bijective(cfg)
        res["factorization_bijective"] = verdict
        res["failed_precondition"] = None
    except PreconditionFailed as exc:
        verdict = None
        res["factorization_bijective"] = None
        res["failed_precondition"] = exc.flag
    if args.verify:
        if verdict is None:
            res["verification"] = {"performed": False, "brute_force": None, "match": None}
        else:
            brute = tp.verify_psi_bijectivity(cfg)
            res["verification"] = {"performed": True, "brute_force": brute, "match": brute == verdict}
            if brute != verdict:
                code = EXIT_MISMATCH
    return res, code


def build_rows(m) -> list[list[int]]:
    return m.tolist()


def _data_from_args(args) -> r1.RankOneData:
    orders = parse_group(args.group)
    a = parse_element(args.a, orders)
    chi = parse_element(args.chi, orders)
    try:
        return r1.RankOneData(orders, a, chi)
    except PreconditionFailed as exc:
        raise UsageError(str(exc)) from None


def cmd_rank1(args) -> tuple[dict, int]:
    data = _data_from_args(args)
    res: dict = {"data": data.to_json()}
    bij = r1.factorization_bijective(data)
    code = EXIT_OK
    if args.action == "info":
        K = r1.K_subgroup(data)
        Kp = r1.K_perp(data)
        res.update({"K_order": len(K), "K_perp_order": len(Kp),
                    "factorization_bijective": bij,
                    "parameter_map_bijective": r1.parameter_map_bijective(data),
                    "quotient_dimension": r1.quotient_dimension(data)})
        if args.list:
            res["K"] = [p.to_json() for p in K]
            res["K_perp"] = [p.to_json() for p in Kp]
    elif args.action == "factor":
        _need_bijective(data)
        beta, g = parse_param(args.simple, data)
        fs = r1.factor_simple(data, beta, g)
        res.update({"simple": {"beta": list(beta), "g": list(g),
                               "dim": r1.dim_simple(data, beta, g)},
                    "factorization": fs.to_json()})
    elif args.action == "tensor":
        _need_bijective(data)
        left = parse_param(args.left, data)
        right = parse_param(args.right, data)
        pred = r1.predict_tensor(data, left, right)
        res.update({"left": _param_json(data, left), "right": _param_json(data, right),
                    "prediction": pred.to_json()})
        if args.oracle:
            H = build_HD(data)
            cache = simple_cache(H)
            mods = [cache.get(SimpleParam(data.character(b), g)) for b, g in (left, right)]
            M = tensor(*mods)
            soc = socle(M, cache)
            match = (soc.multiset() == pred.multiset()
                     and (soc.dim == M.dim) == (pred.mode == r1.COMPLETE)
                     and soc.dims(cache) == sorted(pred.dims, reverse=True))
            res["oracle"] = {"tensor_dim": M.dim, "socle_dim": soc.dim,
                             "socle": [dict(s, dim=cache.get(SimpleParam(data.character(s["beta"]),
                                                                         tuple(s["g"]))).dim)
                                       for s in soc.to_json()],
                             "verdict": "MATCH" if match else "MISMATCH"}
            if not match:
                code = EXIT_MISMATCH
    return res, code


def _need_bijective(data):
    if not r1.factorization_bijective(data):
        raise UsageError(f"{data!r} does not satisfy l odd and l = M = N")


def _param_json(data, param) -> dict:
    beta, g = param
    return {"beta": list(beta), "g": list(g), "dim": r1.dim_simple(data, beta, g)}


def cmd_verify_all(args) -> tuple[dict, int]:
    for name in ("max_ell", "max_n", "max_group"):
        if getattr(args, name) < 2:
            raise UsageError(f"--{name.replace('_', '-')} must be >= 2")
    caps = acceptance.Caps(args.max_ell, args.max_n, args.max_group)
    results = acceptance.run_all(caps)
    failing = next((r for r in results if not r.passed), None)
    res = {"criteria": [r.to_json(timing=args.timing) for r in results],
           "all_passed": failing is None,
           "first_failure": ({"criterion": failing.number, "case": failing.failure}
                             if failing else None)}
    return res, EXIT_OK if failing is None else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# driver


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pointed-hopf", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable table")
    common.add_argument("--timing", action="store_true", help="include wall-clock timing")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("urs", parents=[common], help="criteria for u_{r,s}(sl_n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--z", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="brute-force the factorization verdict")
    p.set_defaults(func=cmd_urs)

    p = sub.add_parser("rank1", help="rank-one data (G, chi, a)")
    p.add_argument("--group", required=True, help="e.g. Z3 or Z2xZ4")
    p.add_argument("--a", required=True, help="g<i> or comma-separated exponents")
    p.add_argument("--chi", required=True, help="comma-separated exponents")
    acts = p.add_subparsers(dest="action", required=True)
    a = acts.add_parser("info", parents=[common])
    a.add_argument("--list", action="store_true", help="list K and K-perp")
    a = acts.add_parser("factor", parents=[common])
    a.add_argument("--simple", required=True, help="c=K or beta=E:g=E")
    a = acts.add_parser("tensor", parents=[common])
    a.add_argument("--left", required=True, help="c=K or beta=E:g=E")
    a.add_argument("--right", required=True, help="c=K or beta=E:g=E")
    a.add_argument("--oracle", action="store_true", help="compare against the computed socle")
    p.set_defaults(func=cmd_rank1)

    p = sub.add_parser("verify-all", parents=[common], help="run the acceptance suite")
    p.add_argument("--max-ell", type=int, default=acceptance.DEFAULT_CAPS.max_ell)
    p.add_argument("--max-n", type=int, default=acceptance.DEFAULT_CAPS.max_n)
    p.add_argument("--max-group", type=int, default=acceptance.DEFAULT_CAPS.max_group)
    p.set_defaults(func=cmd_verify_all)
    return parser


def _parameters(args) -> dict:
    skip = {"func", "pretty", "timing", "command"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def render_pretty(report: dict) -> str:
    lines = []

    def walk(prefix, v):
        if isinstance(v, dict):
            if not v:
                lines.append(f"{prefix:<40} {{}}")
            for k, x in v.items():
                walk(f"{prefix}.{k}" if prefix else str(k), x)
        elif isinstance(v, list) and v and all(isinstance(x, (dict, list)) for x in v):
            for i, x in enumerate(v):
                walk(f"{prefix}[{i}]", x)
        else:
            lines.append(f"{prefix:<40} {json.dumps(v)}")

    walk("", report)
    return "\n".join(lines)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        results, code = args.func(args)
    except (UsageError, PointedHopfError, ValueError) as exc:
        print(json.dumps({"command": args.command, "error": str(exc)}), file=sys.stderr)
        return EXIT_USAGE
    report = {
        "command": args.command if args.command != "rank1" else f"rank1 {args.action}",
        "parameters": _parameters(args),
        "results": results,
        "provenance": PROVENANCE,
        "timing": ({"seconds": f"{time.perf_counter() - start:.3f}"} if args.timing else None),
    }
    if args.pretty:
        print(render_pretty(report))
    else:
        print(json.dumps(report, indent=2, sort_keys=True))
    return code


if __name__ == "__main__":
    sys.exit(main())
