"""Command-line interface: ``powersums {gen,table,verify,bernoulli}``.

Exit codes: 0 success, 1 verification or cross-method failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import harness
from .bernoulli import bernoulli_number, bernoulli_polynomial
from .exact_poly import Polynomial
from .powersum import brute_force_sum, faulhaber, power_sum_recurrence
from .render import OutputRecord, render_latex, render_plain, render_record

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 0:
        raise argparse.ArgumentTypeError(f"{value} is negative")
    return value


def _positive(text: str) -> int:
    value = _non_negative(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _format_line(n: int, poly: Polynomial, fmt: str, var: str = "m") -> str:
    if fmt == "latex":
        return f"S_{{{n}}}({var}) = {render_latex(poly, var)}"
    return f"S_{n}({var}) = {render_plain(poly, var)}"


def cmd_gen(n: int, method: str, fmt: str, out=None) -> int:
    out = out or sys.stdout
    if method in ("bernoulli", "both") and n == 0:
        raise UsageError(
            "the Bernoulli closed form needs n >= 1; use --method recurrence for S_0"
        )
    sums = []
    if method in ("recurrence", "both"):
        sums.append(power_sum_recurrence(n))
    if method in ("bernoulli", "both"):
        sums.append(faulhaber(n))
    equal = all(s.poly == sums[0].poly for s in sums)

    if fmt == "json":
        records = [OutputRecord.from_power_sum(s) for s in sums]
        if len(records) == 1:
            print(render_record(records[0]), file=out)
        else:
            doc = {"equal": equal, "records": [r.to_dict() for r in records]}
            print(json.dumps(doc, indent=2), file=out)
    elif len(sums) == 1:
        print(_format_line(n, sums[0].poly, fmt), file=out)
    else:
        for s in sums:
            print(f"{_format_line(n, s.poly, fmt)}    [{s.method}]", file=out)
        print(f"equal: {str(equal).lower()}", file=out)

    if not equal:
        print("error: recurrence and Bernoulli polynomials differ", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_table(n: int, m_max: int, out=None) -> int:
    out = out or sys.stdout
    poly = power_sum_recurrence(n).poly
    rows = []
    bad = 0
    for m in range(m_max + 1):
        brute = brute_force_sum(n, m)
        value = poly(m)
        ok = value == brute
        bad += not ok
        shown = str(value.numerator) if value.denominator == 1 else str(value)
        rows.append((str(m), str(brute), shown, "ok" if ok else "MISMATCH"))
    header = ("m", "direct sum", f"S_{n}(m)", "match")
    widths = [max(len(r[i]) for r in rows + [header]) for i in range(4)]
    for r in [header] + rows:
        print("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip(), file=out)
    if bad:
        print(f"error: {bad} row(s) mismatch", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_verify(
    max_n: int,
    max_m: int,
    order: int = 20,
    seed: int = harness.DEFAULT_SEED,
    inject_fault: int | None = None,
    out=None,
) -> int:
    out = out or sys.stdout
    recurrence = power_sum_recurrence
    if inject_fault is not None:
        recurrence = harness.faulty_recurrence(inject_fault)
    reports = harness.run_all(max_n, max_m, order=order, seed=seed, recurrence=recurrence)
    for rep in reports:
        print(rep.render(), file=out)
    failed = [r.suite_name for r in reports if not r.passed]
    total = sum(r.cases_run for r in reports)
    if failed:
        print(f"FAILED suites: {', '.join(failed)} ({total} cases run)", file=out)
        return EXIT_FAIL
    print(f"all {len(reports)} suites passed ({total} cases run)", file=out)
    return EXIT_OK


def cmd_bernoulli(n: int, poly: bool, out=None) -> int:
    out = out or sys.stdout
    if poly:
        print(str(bernoulli_polynomial(n)), file=out)
    else:
        print(str(bernoulli_number(n)), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powersums",
        description="Exact power-sum polynomials S_n(m) = 1^n + ... + m^n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="print the polynomial S_n(m)")
    gen.add_argument("--n", type=_non_negative, required=True)
    gen.add_argument("--method", choices=["recurrence", "bernoulli", "both"], default="recurrence")
    gen.add_argument("--format", choices=["plain", "latex", "json"], default="plain")

    table = sub.add_parser("table", help="compare S_n(m) with direct summation")
    table.add_argument("--n", type=_non_negative, required=True)
    table.add_argument("--m-max", type=_non_negative, required=True)

    verify = sub.add_parser("verify", help="run every identity suite")
    verify.add_argument("--max-n", type=_positive, default=20)
    verify.add_argument("--max-m", type=_positive, default=50)
    verify.add_argument("--order", type=_positive, default=20, help="series truncation order")
    verify.add_argument("--seed", type=int, default=harness.DEFAULT_SEED)
    verify.add_argument("--inject-fault", type=_non_negative, default=None, help=argparse.SUPPRESS)

    bern = sub.add_parser("bernoulli", help="print B_n or B_n(x)")
    bern.add_argument("--n", type=_non_negative, required=True)
    bern.add_argument("--poly", action="store_true", help="print the polynomial B_n(x)")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "gen":
            return cmd_gen(args.n, args.method, args.format)
        if args.command == "table":
            return cmd_table(args.n, args.m_max)
        if args.command == "verify":
            return cmd_verify(args.max_n, args.max_m, args.order, args.seed, args.inject_fault)
        return cmd_bernoulli(args.n, args.poly)
    except UsageError as exc:
        print(f"powersums {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
