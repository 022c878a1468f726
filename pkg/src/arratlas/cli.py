"""Command-line interface: ``arratlas {chi,count,table,enumerate,verify}``.

Exit codes: 0 success, 1 verification mismatch, 2 argument or cap error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from .arrangement import (
    DEFAULT_MAX_N,
    boxed_threshold_arrangement,
    char_poly,
    default_jobs,
    regions_from_chi,
    threshold_arrangement,
)
from .errors import NonIntegerCoefficient, VerificationModulusMismatch
from .formulas import (
    chi_boxed_threshold,
    chi_threshold,
    regions_boxed,
    regions_boxed_via_egf,
    regions_threshold,
)
from .graphs import enumerate_colored, enumerate_threshold_graphs
from .oracle import DEFAULT_CAP, enumerate_regions
from .orders import enumerate_half_orders, enumerate_threshold_orders, subform
from .verify import SUITES, run_suite

ENUMERATION_CAP = 7  # count by walking a stream
STREAM_CAP = 6  # print a stream
TABLE_MAX = 12

# (default n_max, largest n_max allowed without --cap-override)
SUITE_LIMITS = {
    "table1": (10, TABLE_MAX),
    "shift": (4, 5),
    "bijection": (4, 5),
    "coefficients": (8, 12),
    "egf": (8, 20),
    "eulerian": (12, 30),
}


class UsageError(Exception):
    """Bad arguments or an exceeded cap; reported with exit code 2."""


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _check_cap(args, value: int, cap: int, what: str) -> None:
    if value > cap and not args.cap_override:
        raise UsageError(f"{what} is capped at n <= {cap} (got {value}); pass --cap-override to lift it")


def _arrangement(family: str, n: int):
    return boxed_threshold_arrangement(n) if family == "boxed" else threshold_arrangement(n)


def _interpolate(args, n: int):
    _check_cap(args, n, DEFAULT_MAX_N, "finite-field interpolation")
    return char_poly(_arrangement(args.family, n), q0=args.q0, jobs=args.jobs, max_n=None)


# -- subcommands ---------------------------------------------------------------


def cmd_chi(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    if args.method == "interpolate":
        chi = _interpolate(args, args.n)
    else:
        chi = chi_boxed_threshold(args.n) if args.family == "boxed" else chi_threshold(args.n)
    print(_dump(chi.to_json()))
    return 0


def _count_formula(args) -> int:
    return regions_boxed(args.n) if args.family == "boxed" else regions_threshold(args.n)


def _count_zaslavsky(args) -> int:
    return regions_from_chi(_interpolate(args, args.n), args.n)


def _count_egf(args) -> int:
    if args.family != "boxed":
        raise UsageError("the egf method is defined for --family boxed only")
    return regions_boxed_via_egf(args.n)[args.n]


def _count_orders(args) -> int:
    _check_cap(args, args.n, ENUMERATION_CAP, "order enumeration")
    if args.family == "boxed":
        if args.n < 2:
            raise UsageError("half-orders are enumerated for n >= 2")
        return sum(1 for _ in enumerate_half_orders(args.n))
    return sum(1 for _ in enumerate_threshold_orders(args.n))


def _count_graphs(args) -> int:
    _check_cap(args, args.n, ENUMERATION_CAP, "graph enumeration")
    stream = enumerate_colored(args.n) if args.family == "boxed" else enumerate_threshold_graphs(args.n)
    return sum(1 for _ in stream)


def _count_oracle(args) -> int:
    cap = None if args.cap_override else DEFAULT_CAP
    return len(enumerate_regions(_arrangement(args.family, args.n), cap=cap, jobs=args.jobs))


COUNT_METHODS: dict[str, Callable] = {
    "formula": _count_formula,
    "zaslavsky": _count_zaslavsky,
    "egf": _count_egf,
    "orders": _count_orders,
    "graphs": _count_graphs,
    "oracle": _count_oracle,
}


def cmd_count(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    print(COUNT_METHODS[args.method](args))
    return 0


def cmd_table(args) -> int:
    if not 2 <= args.n_max <= TABLE_MAX:
        raise UsageError(f"--n-max must be between 2 and {TABLE_MAX}")
    rows = []
    for n in range(2, args.n_max + 1):
        chi = chi_boxed_threshold(n)
        rows.append({"n": n, "coeffs": [str(c) for c in chi.coeffs], "regions": str(regions_boxed(n))})
    if args.format == "json":
        print(json.dumps(rows))
    else:
        print("n,coeffs,regions")
        for r in rows:
            print(f"{r['n']},{' '.join(r['coeffs'])},{r['regions']}")
    return 0


def cmd_enumerate(args) -> int:
    _check_cap(args, args.n, STREAM_CAP, "enumeration")
    if args.what == "orders":
        if args.n < 2:
            raise UsageError("half-orders are enumerated for n >= 2")
        for h in enumerate_half_orders(args.n):
            print(_dump({**h.to_json(), "form": subform(h), "text": str(h)}))
    else:
        if args.n < 1:
            raise UsageError("--n must be >= 1")
        for g in enumerate_colored(args.n):
            print(_dump(g.to_json()))
    return 0


def cmd_verify(args) -> int:
    default, limit = SUITE_LIMITS[args.suite]
    n_max = default if args.n_max is None else args.n_max
    if n_max < 2:
        raise UsageError("--n-max must be >= 2")
    if n_max > limit and not args.cap_override:
        raise UsageError(f"suite {args.suite} is capped at --n-max {limit}; pass --cap-override to lift it")
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    report = run_suite(args.suite, n_max=n_max, trials=args.trials, seed=args.seed, jobs=args.jobs)
    print(json.dumps(report, indent=2))
    failed = [c["check"] for c in report["checks"] if not c["ok"]]
    status = "pass" if report["ok"] else f"FAIL ({len(failed)} of {len(report['checks'])} checks)"
    print(f"{args.suite}: {status}", file=sys.stderr)
    return 0 if report["ok"] else 1


# -- parser --------------------------------------------------------------------


def _jobs(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("--jobs must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arratlas", description="Regions of the threshold and boxed threshold arrangements."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=_jobs, default=default_jobs(), help="worker processes (default: $ARRATLAS_JOBS or 1)")
    common.add_argument("--cap-override", action="store_true", help="lift the size caps on slow methods")

    family = argparse.ArgumentParser(add_help=False)
    family.add_argument("--family", choices=["threshold", "boxed"], default="boxed")
    family.add_argument("--n", type=int, required=True)

    p = sub.add_parser("chi", parents=[common, family], help="characteristic polynomial as JSON")
    p.add_argument("--method", choices=["formula", "interpolate"], default="formula")
    p.add_argument("--q0", type=int, default=None, help="first modulus of the interpolation schedule")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("count", parents=[common, family], help="number of regions")
    p.add_argument("--method", choices=list(COUNT_METHODS), default="formula")
    p.add_argument("--q0", type=int, default=None, help="first modulus for --method zaslavsky")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", parents=[common], help="polynomials and region counts of BT_n")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("enumerate", parents=[common], help="stream half-orders or colored graphs")
    p.add_argument("--what", choices=["orders", "graphs"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["jsonl"], default="jsonl")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="run a cross-validation suite")
    p.add_argument("--suite", choices=list(SUITES), required=True)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--trials", type=int, default=20, help="random sub-arrangements per n (shift suite)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:  # caps, domains and bad moduli are ValueErrors
        print(f"arratlas: error: {exc}", file=sys.stderr)
        return 2
    except (VerificationModulusMismatch, NonIntegerCoefficient) as exc:
        print(f"arratlas: mismatch: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
