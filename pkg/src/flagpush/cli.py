"""Command-line front end: roots, weyl, pushforward, integrate, verify.

Results go to stdout and diagnostics to stderr.  Exit status is 0 on
success, 1 when a verification or route cross-check fails, 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import (FlagpushError, IndexOutOfRange, NotDivisible, NotInImage,
                     NotPolynomialResult, RouteDisagreement)
from .localize import ROUTES, gysin, integrate_GH, integrate_GT
from .polyring import parse_poly
from .rootsys import build_root_system, parabolic_subsystem
from .verify import run_verify
from .weylgrp import weyl_group

ROUTE_NAMES = {"closed": "closed_form", "localized": "localization",
               "demazure": "demazure_oracle", "all": "all"}

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

# raised by the engine itself rather than by bad input
_COMPUTATION_ERRORS = (RouteDisagreement, NotInImage, NotPolynomialResult, NotDivisible)


@dataclass
class CommandConfig:
    subcommand: str
    cartan_type: str
    parabolic: str | None = None
    poly: str | None = None
    route: str = "closed"
    seed: int = 0
    max_degree: int = 5
    trials: int = 25
    json: bool = False
    size_guard_override: bool = False


class InputError(FlagpushError):
    pass


def rational_str(c) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def _human(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def parse_parabolic(text: str | None, rank: int):
    """'1,3' -> frozenset({1, 3}); '' is the empty subset; None means not given."""
    if text is None:
        return None
    out = set()
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if not part.isdigit():
            raise InputError(f"bad parabolic index {part!r}")
        i = int(part)
        if not 1 <= i <= rank:
            raise IndexOutOfRange(f"parabolic index {i} outside 1..{rank}")
        out.add(i)
    return frozenset(out)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="flagpush",
                                 description="Exact Gysin pushforwards on flag manifolds.")
    sub = ap.add_subparsers(dest="subcommand", required=True)

    def common(p, poly=False):
        p.add_argument("--type", dest="cartan_type", required=True, help="Cartan type, e.g. A2")
        p.add_argument("--parabolic", help="comma-separated simple indices defining H")
        if poly:
            p.add_argument("--poly", required=True, help="polynomial in z1..zn")
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--size-guard-override", action="store_true",
                       help="allow Weyl groups larger than the size guard")

    common(sub.add_parser("roots", help="positive roots"))
    common(sub.add_parser("weyl", help="Weyl group statistics"))
    p = sub.add_parser("pushforward", help="f_* from G/T to G/H")
    common(p, poly=True)
    p.add_argument("--route", choices=sorted(ROUTE_NAMES), default="closed")
    common(sub.add_parser("integrate", help="integral over G/T, or G/H with --parabolic"),
           poly=True)
    p = sub.add_parser("verify", help="run the property suite")
    common(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-degree", type=int, default=5)
    p.add_argument("--trials", type=int, default=25)
    return ap


def config_from_args(ns) -> CommandConfig:
    cfg = CommandConfig(ns.subcommand, ns.cartan_type, ns.parabolic,
                        getattr(ns, "poly", None), getattr(ns, "route", "closed"),
                        getattr(ns, "seed", 0), getattr(ns, "max_degree", 5),
                        getattr(ns, "trials", 25), ns.json, ns.size_guard_override)
    if cfg.seed < 0:
        raise InputError("seed must be non-negative")
    if cfg.trials < 1:
        raise InputError("trials must be at least 1")
    if cfg.max_degree < 0:
        raise InputError("max-degree must be non-negative")
    return cfg


# -- subcommands: each returns (exit code, json result, checks, text lines) --

def _setup(cfg):
    rs = build_root_system(cfg.cartan_type, override=cfg.size_guard_override)
    return rs, parse_parabolic(cfg.parabolic, rs.rank)


def _require_parabolic(S):
    if S is None:
        raise InputError("--parabolic is required")
    return S


def cmd_roots(cfg):
    rs, S = _setup(cfg)
    result = {"positive_roots": [list(r) for r in rs.positive_roots]}
    lines = [f"positive roots of {rs.cartan_type} ({len(rs.positive_roots)}):"]
    lines += [f"  {r}" for r in rs.positive_roots]
    if S is not None:
        sub = parabolic_subsystem(rs, S)
        result["parabolic_roots"] = [list(r) for r in sub]
        lines.append(f"parabolic roots for S={{{','.join(map(str, sorted(S)))}}} ({len(sub)}):")
        lines += [f"  {r}" for r in sub]
    return EXIT_OK, result, [], lines


def cmd_weyl(cfg):
    rs, S = _setup(cfg)
    W = weyl_group(rs, override=cfg.size_guard_override)
    counts = Counter(w.length for w in W.elements)
    top = max(counts)
    dist = [counts[k] for k in range(top + 1)]
    result = {"order": W.order, "longest_length": top, "length_distribution": dist}
    lines = [f"|W({rs.cartan_type})| = {W.order}",
             f"longest element length = {top}",
             "elements by length: " + " ".join(map(str, dist))]
    if S is not None:
        cosets = W.cosets(S)
        rep_lengths = Counter(W[k].length for k in cosets.min_reps)
        rdist = [rep_lengths[k] for k in range(max(rep_lengths) + 1)]
        result.update({"parabolic_order": len(cosets.subgroup_indices),
                       "cosets": len(cosets), "coset_rep_length_distribution": rdist})
        lines += [f"|W_H| = {len(cosets.subgroup_indices)}",
                  f"cosets = {len(cosets)}",
                  "minimal coset representatives by length: " + " ".join(map(str, rdist))]
    return EXIT_OK, result, [], lines


def cmd_pushforward(cfg):
    rs, S = _setup(cfg)
    S = _require_parabolic(S)
    p = parse_poly(cfg.poly, rs.rank, "z")
    W = weyl_group(rs, override=cfg.size_guard_override)
    route = ROUTE_NAMES[cfg.route]
    checks = []
    if route == "all":
        outs = {r: gysin(p, rs, S, r, W).result for r in ROUTES}
        agree = len(set(outs.values())) == 1
        check = {"name": "route_agreement", "status": "pass" if agree else "fail",
                 "outputs": {r: str(v) for r, v in outs.items()}}
        checks.append(check)
        if not agree:
            lines = [f"{r}: {v}" for r, v in outs.items()]
            return EXIT_FAIL, None, checks, lines
        out = outs[ROUTES[0]]
    else:
        out = gysin(p, rs, S, route, W).result
    return EXIT_OK, {"text": str(out), "terms": out.to_json()}, checks, [str(out)]


def cmd_integrate(cfg):
    rs, S = _setup(cfg)
    p = parse_poly(cfg.poly, rs.rank, "z")
    W = weyl_group(rs, override=cfg.size_guard_override)
    value = integrate_GT(p, rs, W) if S is None else integrate_GH(p, rs, S, W)
    return EXIT_OK, {"value": rational_str(value)}, [], [_human(value)]


def cmd_verify(cfg):
    rs, S = _setup(cfg)
    weyl_group(rs, override=cfg.size_guard_override)
    subsets = None if S is None else [S]
    report = run_verify(rs, subsets, seed=cfg.seed, trials=cfg.trials,
                        max_degree=cfg.max_degree)
    lines = []
    for c in report.checks:
        line = f"{c.status.upper():4} {c.name} ({c.count})"
        if "reason" in c.detail:
            line += f": {c.detail['reason']}"
        if c.name == "euler_characteristic_GT":
            line += f" chi = {_human(Fraction(c.detail['chi']))}"
        lines.append(line)
        for w in c.failures:
            lines.append("     witness " + json.dumps(w, sort_keys=True))
    status = "pass" if report.passed else "fail"
    lines.append(f"overall: {status.upper()}")
    code = EXIT_OK if report.passed else EXIT_FAIL
    result = {"status": status, "seed": cfg.seed, "trials": cfg.trials,
              "max_degree": cfg.max_degree}
    return code, result, report.to_json(), lines


COMMANDS = {"roots": cmd_roots, "weyl": cmd_weyl, "pushforward": cmd_pushforward,
            "integrate": cmd_integrate, "verify": cmd_verify}


def run(cfg: CommandConfig, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        code, result, checks, lines = COMMANDS[cfg.subcommand](cfg)
    except RouteDisagreement as exc:
        print(f"error: {exc}", file=err)
        return EXIT_FAIL
    except _COMPUTATION_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return EXIT_FAIL
    except (FlagpushError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    if cfg.json:
        S = parse_parabolic(cfg.parabolic, 10**9)
        doc = {"type": cfg.cartan_type.strip().upper(),
               "parabolic": None if S is None else sorted(S),
               "route": cfg.route if cfg.subcommand == "pushforward" else None,
               "result": result, "checks": checks}
        print(json.dumps(doc, sort_keys=True, indent=2), file=out)
    else:
        print("\n".join(lines), file=out)
    if code == EXIT_FAIL:
        print("error: verification failed", file=err)
    return code


def main(argv=None) -> int:
    ap = build_parser()
    try:
        ns = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        cfg = config_from_args(ns)
    except FlagpushError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
