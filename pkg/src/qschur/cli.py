"""Command line driver: run identity checks and duality verifications.

    qschur verify --mode quantum --m 1 --n 1 --d 2 --k 1 --format json
    qschur list-checks
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .centralizer import DEFAULT_DIM_CAP, check_specialization_point
from .checks import CHECKS, Params, check_names, run_check
from .glmn import relation_instances
from .superspace import SuperSig

DIM_KEYS = ("module", "commutant", "span_Adk", "bicommutant", "hecke_image")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational P/Q, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qschur", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run checks and print a report")
    v.add_argument("--mode", choices=["quantum", "classical"], default="quantum")
    v.add_argument("--m", type=int, default=1, help="even dimension")
    v.add_argument("--n", type=int, default=1, help="odd dimension")
    v.add_argument("--d", type=int, default=2, help="tensor degree")
    v.add_argument("--k", type=int, default=0, help="extra Hecke rank")
    v.add_argument("--check", action="append", default=None,
                   help="check name (repeatable) or 'all'")
    v.add_argument("--specialize", type=_fraction, default=None, metavar="P/Q",
                   help="also recompute duality dimensions at q = P/Q")
    v.add_argument("--format", choices=["json", "text"], default="text")
    v.add_argument("--dim-cap", type=int, default=DEFAULT_DIM_CAP,
                   help="largest module dimension handled by the duality check")

    lc = sub.add_parser("list-checks", help="list available check names")
    lc.add_argument("--format", choices=["json", "text"], default="text")
    lc.add_argument("--relations", action="store_true",
                    help="list U_q(gl(m|n)) relation identifiers instead")
    lc.add_argument("--m", type=int, default=1)
    lc.add_argument("--n", type=int, default=1)
    return parser


def _validate(parser: argparse.ArgumentParser, args) -> Params:
    if args.m < 0 or args.n < 0 or args.m + args.n < 1:
        parser.error("need m, n >= 0 and m + n >= 1")
    if args.d < 1:
        parser.error("need d >= 1")
    if not 0 <= args.k <= args.d:
        parser.error("need 0 <= k <= d")
    if args.dim_cap < 1:
        parser.error("--dim-cap must be positive")
    if args.specialize is not None:
        try:
            check_specialization_point(args.specialize, args.d + args.k)
        except ValueError as exc:
            parser.error(f"--specialize: {exc}")
    return Params(args.mode, args.m, args.n, args.d, args.k, args.specialize, args.dim_cap)


def _selected(parser, requested) -> list[str]:
    if not requested or "all" in requested:
        return sorted(check_names())
    unknown = [c for c in requested if c not in check_names()]
    if unknown:
        parser.error(f"unknown check(s): {', '.join(unknown)}; see list-checks")
    return sorted(set(requested))


def run_verify(params: Params, names: list[str]) -> dict:
    results, dims = [], dict.fromkeys(DIM_KEYS)
    for name in names:
        res = run_check(name, params)
        if "dims" in res:
            dims.update(res.pop("dims"))
        results.append(res)
    return {
        "params": {"mode": params.mode, "m": params.m, "n": params.n,
                   "d": params.d, "k": params.k},
        "checks": results,
        "dims": dims,
        "passed": all(r["status"] != "fail" for r in results),
    }


def format_text(report: dict) -> str:
    p = report["params"]
    lines = [f"mode={p['mode']} m={p['m']} n={p['n']} d={p['d']} k={p['k']}"]
    for r in report["checks"]:
        lines.append(f"{r['status'].upper():7} {r['name']}: {r['detail']}")
    dims = {k: v for k, v in report["dims"].items() if v is not None}
    if dims:
        lines.append("dims: " + ", ".join(f"{k}={v}" for k, v in dims.items()))
    lines.append("PASSED" if report["passed"] else "FAILED")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "list-checks":
        if args.relations:
            try:
                sig = SuperSig(args.m, args.n)
            except ValueError as exc:
                parser.error(str(exc))
            ids = [rid for rid, _, _ in relation_instances(sig)]
            print(json.dumps(ids, indent=2) if args.format == "json" else "\n".join(ids))
            return 0
        rows = [{"name": c.name, "modes": list(c.modes), "description": c.description}
                for c in sorted(CHECKS, key=lambda c: c.name)]
        if args.format == "json":
            print(json.dumps(rows, indent=2))
        else:
            width = max(len(r["name"]) for r in rows)
            for r in rows:
                print(f"{r['name']:<{width}}  [{','.join(r['modes'])}]  {r['description']}")
        return 0

    params = _validate(parser, args)
    names = _selected(parser, args.check)
    report = run_verify(params, names)
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        print(format_text(report))
    return 0 if report["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
