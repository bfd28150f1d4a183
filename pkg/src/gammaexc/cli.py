"""Command-line frontend: compute, gamma, verify, table, conjugacy.

Output is byte-deterministic for fixed inputs: polynomials print with terms
in a fixed order, JSON uses sorted canonical term lists, and verification
reports are assembled in registry order whatever the --jobs setting (timings
are only shown on request, since they are not deterministic).  Usage errors
exit with status 2; failed verification checks exit with status 1.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import checks, closedforms, oracle
from .groups import BudgetExceeded, DEFAULT_BUDGET, InvalidSpec
from .oracle import FamilySpec, NonIncreasingLetters, UndefinedStatistic, \
    UnsupportedClass
from .poly import (
    BIVARIATE,
    NotHomogeneous,
    NotPalindromic,
    Q_COEFFICIENTS,
    UNIVARIATE,
    ZeroPolynomial,
    gamma_decompose,
)

_UNIVARIATE_FAMILIES = {"aderexc", "conjexc", "qrefined"}
_MODE_FLAGS = {"uni": UNIVARIATE, "biv": BIVARIATE, "q": Q_COEFFICIENTS}


class UsageError(Exception):
    pass


def _family_spec(args):
    lam = None
    if getattr(args, "lam", None):
        lam = tuple(int(x) for x in args.lam.split(","))
    return FamilySpec(
        args.family,
        args.n,
        getattr(args, "cls", "all"),
        fixed=getattr(args, "fixed", None),
        lam=lam,
        stat=getattr(args, "stat", None),
    )


def _compute(spec, engine, budget, jobs):
    if engine == "oracle":
        return oracle.family_poly(spec, budget=budget, jobs=jobs)
    if engine == "closed":
        try:
            return closedforms.closed_family(spec)
        except closedforms.NoClosedForm as exc:
            raise UsageError(f"{exc}; pass --engine oracle") from None
    # default: closed where available, oracle otherwise
    try:
        return closedforms.closed_family(spec)
    except closedforms.NoClosedForm:
        return oracle.family_poly(spec, budget=budget, jobs=jobs)


def _print_poly(poly, fmt, out):
    if fmt == "json":
        out.write(poly.to_json() + "\n")
    else:
        out.write(str(poly) + "\n")


def _cmd_compute(args, out):
    spec = _family_spec(args)
    poly = _compute(spec, args.engine, args.budget, args.jobs)
    _print_poly(poly, args.format, out)
    return 0


def _auto_mode(spec):
    if spec.family == "qrefined":
        return Q_COEFFICIENTS
    if spec.family in _UNIVARIATE_FAMILIES:
        return UNIVARIATE
    return BIVARIATE


def _prepare_for_mode(poly, mode):
    """Univariate mode on a bivariate family means its s = 1 specialization."""
    if mode == UNIVARIATE and "s" in poly.vars and poly.degree("s") > 0:
        return poly.substitute_one("s")
    return poly


def _cmd_gamma(args, out):
    spec = _family_spec(args)
    poly = _compute(spec, args.engine, args.budget, args.jobs)
    mode = _MODE_FLAGS[args.mode] if args.mode else _auto_mode(spec)
    poly = _prepare_for_mode(poly, mode)
    try:
        expansion = gamma_decompose(poly, mode)
    except NotPalindromic as exc:
        if args.format == "json":
            out.write(json.dumps({
                "palindromic": False,
                "witness": {
                    "low_index": exc.low_index,
                    "high_index": exc.high_index,
                    "low": str(exc.low),
                    "high": str(exc.high),
                },
            }, separators=(",", ":")) + "\n")
        else:
            out.write(f"not palindromic: {exc}\n")
        return 0
    if args.format == "json":
        out.write(json.dumps(expansion.to_json_dict(),
                             separators=(",", ":")) + "\n")
    else:
        out.write(str(expansion) + "\n")
    return 0


def _gamma_or_none(poly, mode):
    try:
        return gamma_decompose(poly, mode)
    except (NotPalindromic, ZeroPolynomial, NotHomogeneous):
        return None


def _table_rows(args):
    lo, hi = args.n_range
    for n in range(lo, hi + 1):
        spec = FamilySpec(args.family, n, args.cls, fixed=args.fixed,
                          stat=args.stat)
        poly = _compute(spec, args.engine, args.budget, args.jobs)
        mode = _MODE_FLAGS[args.mode] if args.mode else _auto_mode(spec)
        poly = _prepare_for_mode(poly, mode)
        expansion = None if poly.is_zero else _gamma_or_none(poly, mode)
        if poly.is_zero:
            coeffs = []
        elif "t" in poly.vars:
            coeffs = [c.at_ones() for c in poly.coefficients("t")]
        else:
            coeffs = [poly.at_ones()]
        yield n, poly, coeffs, expansion


def _cmd_table(args, out):
    rows = list(_table_rows(args))
    if args.out == "json":
        payload = []
        for n, poly, coeffs, expansion in rows:
            entry = {
                "family": args.family,
                "class": args.cls,
                "n": n,
                "coefficients": [str(c) for c in coeffs],
                "palindromic": expansion is not None,
            }
            if expansion is not None:
                entry["gammas"] = expansion.to_json_dict()["gammas"]
                entry["r"] = expansion.r
                entry["cos"] = str(expansion.center_of_symmetry)
                entry["gamma_positive"] = expansion.all_gammas_nonnegative()
            payload.append(entry)
        out.write(json.dumps(payload, separators=(",", ":")) + "\n")
        return 0
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["family", "class", "n", "k", "coeff", "gamma_index",
                     "gamma_value", "cos", "gamma_positive"])
    for n, poly, coeffs, expansion in rows:
        gammas = list(expansion.gammas) if expansion is not None else []
        cos = str(expansion.center_of_symmetry) if expansion is not None else ""
        positive = (str(expansion.all_gammas_nonnegative()).lower()
                    if expansion is not None else "")
        height = max(len(coeffs), len(gammas), 1)
        for k in range(height):
            row = [args.family, args.cls, n]
            row.append(k if k < len(coeffs) else "")
            row.append(str(coeffs[k]) if k < len(coeffs) else "")
            if k < len(gammas):
                value = gammas[k]
                text = ";".join(str(c) for c in value) \
                    if isinstance(value, tuple) else str(value)
                row.extend([k, text])
            else:
                row.extend(["", ""])
            row.extend([cos, positive])
            writer.writerow(row)
    return 0


def _cmd_verify(args, out):
    limits = checks.VerifyLimits(
        max_n_a=args.max_n if args.max_n is not None else args.max_n_a,
        max_n_b=args.max_n if args.max_n is not None else args.max_n_b,
        max_n_d=args.max_n if args.max_n is not None else args.max_n_d,
        budget=args.budget,
    )
    results = checks.run_suite(args.suite, limits, jobs=args.jobs)
    failed = skipped = 0
    for res in results:
        stamp = f"  [{res.seconds:7.3f}s]" if args.timings else ""
        out.write(f"{res.status.upper():<7} {res.check_id}  ({res.n_range})"
                  f"{stamp}\n")
        if res.status == "fail":
            failed += 1
            out.write(f"        witness: {res.witness}\n")
        elif res.status == "skipped":
            skipped += 1
            out.write(f"        reason: {res.witness}\n")
    out.write(f"{len(results) - failed - skipped} passed, {failed} failed, "
              f"{skipped} skipped\n")
    return 1 if failed else 0


def _cmd_conjugacy(args, out):
    lam = tuple(int(x) for x in args.lam.split(","))
    n = sum(lam)
    spec = FamilySpec("conjexc", n, lam=lam)
    poly = _compute(spec, args.engine, args.budget, args.jobs)
    _print_poly(poly, args.format, out)
    return 0


def _parse_range(text):
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected a range like 2..8, got {text!r}"
        ) from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gammaexc",
        description="Exact excedance Eulerian polynomials over the classical "
                    "Weyl groups: closed forms, brute-force sums, gamma "
                    "expansions, and a theorem verification suite.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_class=True):
        if with_class:
            p.add_argument("--class", dest="cls", default="all",
                           choices=["all", "plus", "minus"])
        p.add_argument("--engine", choices=["oracle", "closed"], default=None,
                       help="default: closed form when one exists")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="enumeration budget (windows visited)")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--format", choices=["text", "json"], default="text")

    compute = sub.add_parser("compute", help="print one family polynomial")
    compute.add_argument("--family", required=True,
                         choices=sorted(oracle.FAMILIES))
    compute.add_argument("--n", type=int, required=True)
    compute.add_argument("--fixed", type=int, default=None,
                         help="fixed-point count for aderexc")
    compute.add_argument("--lambda", dest="lam", default=None,
                         help="cycle type for conjexc, e.g. 2,2")
    compute.add_argument("--stat", choices=["inv", "cyc"], default=None,
                         help="refining statistic for qrefined")
    add_common(compute)

    gamma = sub.add_parser("gamma", help="print a gamma expansion or the "
                                         "palindromicity counterexample")
    gamma.add_argument("--family", required=True,
                       choices=sorted(oracle.FAMILIES))
    gamma.add_argument("--n", type=int, required=True)
    gamma.add_argument("--fixed", type=int, default=None)
    gamma.add_argument("--lambda", dest="lam", default=None)
    gamma.add_argument("--stat", choices=["inv", "cyc"], default=None)
    gamma.add_argument("--mode", choices=sorted(_MODE_FLAGS), default=None,
                       help="default: biv for the bivariate families, uni "
                            "for the univariate ones, q for qrefined")
    add_common(gamma)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("--suite", default="all",
                        choices=sorted(checks.SUITES) + ["all"])
    verify.add_argument("--max-n", type=int, default=None,
                        help="cap for every group kind (oversized checks "
                             "are skipped by the budget guard)")
    verify.add_argument("--max-n-a", type=int, default=8)
    verify.add_argument("--max-n-b", type=int, default=6)
    verify.add_argument("--max-n-d", type=int, default=6)
    verify.add_argument("--jobs", type=int, default=1)
    verify.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    verify.add_argument("--timings", action="store_true",
                        help="include wall-clock times (non-deterministic)")

    table = sub.add_parser("table", help="batch emission over a range of n")
    table.add_argument("--family", required=True,
                       choices=sorted(f for f in oracle.FAMILIES
                                      if f != "conjexc"))
    table.add_argument("--n-range", type=_parse_range, required=True,
                       metavar="A..B")
    table.add_argument("--fixed", type=int, default=None)
    table.add_argument("--stat", choices=["inv", "cyc"], default=None)
    table.add_argument("--mode", choices=sorted(_MODE_FLAGS), default=None)
    table.add_argument("--out", choices=["csv", "json"], default="csv")
    add_common(table)

    conjugacy = sub.add_parser("conjugacy", help="conjugacy class polynomial")
    conjugacy.add_argument("--lambda", dest="lam", required=True,
                           help="cycle type, e.g. 2,2")
    add_common(conjugacy, with_class=False)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "compute": _cmd_compute,
        "gamma": _cmd_gamma,
        "verify": _cmd_verify,
        "table": _cmd_table,
        "conjugacy": _cmd_conjugacy,
    }
    try:
        return handlers[args.command](args, sys.stdout)
    except (UsageError, InvalidSpec, UnsupportedClass, UndefinedStatistic,
            NonIncreasingLetters, ZeroPolynomial, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
