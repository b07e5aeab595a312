"""Command-line front end.

Exit status: 0 success, 1 verification failure or conjecture violation,
2 mathematical-domain rejection, 64 usage or parse error.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import replace
from typing import Optional, Sequence, TextIO

from .errors import DomainError, ParseError, UsageError
from .exact import approx_decimal, format_rational, parse_rational
from .hypergeom import HypSeriesSpec, classify, evaluate_terminating
from .racah import SCHEMA_VERSION, RacahSpecialParams, kt_sweep, racah_special, racah_table
from .suites import SUITE_NAMES, SuiteLimits, reports_to_json, run_all
from .transforms import (
    binomial_inverse,
    binomial_transform,
    inverse_transform,
    tilde_transform,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_DOMAIN = 2
EXIT_USAGE = 64

DIRECTIONS = {
    "forward": tilde_transform,
    "inverse": inverse_transform,
    "binomial": binomial_transform,
    "binomial-inverse": binomial_inverse,
}


class _UsageExit(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise _UsageExit()


# -- I/O helpers --------------------------------------------------------------

def parse_rational_list(text: str) -> list:
    if text.strip() == "":
        return []
    return [parse_rational(tok) for tok in text.split(",")]


def read_sequence(stream: TextIO) -> list:
    """Line-oriented sequence file: one rational per line, ``#`` comments."""
    out = []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(parse_rational(line))
        except ParseError as exc:
            raise ParseError(str(exc), line=lineno) from None
    return out


def write_sequence(values, stream: TextIO) -> None:
    for v in values:
        stream.write(format_rational(v) + "\n")


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _with_approx(value, digits: Optional[int]) -> str:
    text = format_rational(value)
    if digits is None:
        return text
    return f"{text}  (approx {approx_decimal(value, digits)})"


# -- subcommands ---------------------------------------------------------------

def cmd_hyp(args, out: TextIO) -> int:
    spec = HypSeriesSpec(
        tuple(parse_rational_list(args.num)),
        tuple(parse_rational_list(args.den)),
        parse_rational(args.z),
    )
    c = classify(spec)
    value = evaluate_terminating(spec)
    if args.format == "json":
        out.write(
            _dumps(
                {
                    "schema_version": SCHEMA_VERSION,
                    "kind": "hyp",
                    "numerator_params": [format_rational(a) for a in spec.numerator_params],
                    "denominator_params": [format_rational(b) for b in spec.denominator_params],
                    "argument": format_rational(spec.argument),
                    "classification": c.to_dict(),
                    "value": format_rational(value),
                }
            )
        )
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["value", "terminating", "truncation_index", "saalschutzian", "unit_argument"])
        w.writerow(
            [format_rational(value), c.terminating, c.truncation_index, c.saalschutzian,
             c.unit_argument]
        )
    else:
        out.write(_with_approx(value, args.decimal_digits) + "\n")
        out.write(
            f"# {spec}: terminating at n={c.truncation_index}, "
            f"saalschutzian={str(c.saalschutzian).lower()}, "
            f"unit_argument={str(c.unit_argument).lower()}\n"
        )
    return EXIT_OK


def cmd_transform(args, out: TextIO) -> int:
    if args.input in (None, "-"):
        values = read_sequence(sys.stdin)
    else:
        try:
            with open(args.input, encoding="utf-8") as fh:
                values = read_sequence(fh)
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    result = DIRECTIONS[args.direction](values)
    if args.format == "json":
        out.write(
            _dumps(
                {
                    "schema_version": SCHEMA_VERSION,
                    "kind": "sequence",
                    "direction": args.direction,
                    "entries": [format_rational(v) for v in result],
                }
            )
        )
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "value"])
        for n, v in enumerate(result):
            w.writerow([n, format_rational(v)])
    else:
        write_sequence(result, out)
    return EXIT_OK


def cmd_racah(args, out: TextIO) -> int:
    p = RacahSpecialParams(args.n, args.s, args.T)
    value = racah_special(p)
    if args.format == "json":
        out.write(
            _dumps(
                {
                    "schema_version": SCHEMA_VERSION,
                    "kind": "racah",
                    "n": p.n,
                    "s": p.s,
                    "T": p.T,
                    "value": format_rational(value),
                }
            )
        )
    elif args.format == "csv":
        out.write(f"n,s,T,value\n{p.n},{p.s},{p.T},{format_rational(value)}\n")
    else:
        out.write(_with_approx(value, args.decimal_digits) + "\n")
    return EXIT_OK


def cmd_racah_table(args, out: TextIO) -> int:
    grid = racah_table(args.T)
    rows = [[format_rational(v) for v in row] for row in grid]
    if args.format == "json":
        out.write(_dumps({"schema_version": SCHEMA_VERSION, "kind": "racah_table",
                          "T": args.T, "rows": rows}))
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerows(rows)
    else:
        width = max(len(t) for row in rows for t in row)
        for row in rows:
            out.write("  ".join(t.rjust(width) for t in row) + "\n")
    return EXIT_OK


def cmd_sweep(args, out: TextIO) -> int:
    report = kt_sweep(args.t_min, args.t_max, args.workers, keep_grid=args.grid_dump is not None)
    if args.grid_dump is not None:
        with open(args.grid_dump, "w", encoding="utf-8", newline="") as fh:
            fh.write(report.grid_csv())
    if args.format == "json":
        out.write(report.to_json())
    elif args.format == "csv":
        out.write(report.to_csv())
    else:
        n, s, T = report.witness
        out.write(f"T = {report.t_min}..{report.t_max}: {report.cells_checked} cells checked\n")
        out.write(f"max |R_n(s,T)| = {format_rational(report.max_abs_value)} "
                  f"at n={n}, s={s}, T={T}\n")
        if report.violations:
            out.write(f"{len(report.violations)} cells with |R_n(s,T)| > 1:\n")
            for vn, vs, vT, v in report.violations:
                out.write(f"  n={vn} s={vs} T={vT} value={format_rational(v)}\n")
        else:
            out.write("no violations\n")
    return EXIT_OK if report.passed else EXIT_FAILURE


def _parse_limit_overrides(args) -> tuple[tuple[str, ...], SuiteLimits]:
    names = SUITE_NAMES if args.suite == "all" else (args.suite,)
    limits = SuiteLimits()
    for item in args.limit:
        name, sep, value = item.partition("=")
        if not sep or name not in SUITE_NAMES:
            raise UsageError(f"--limit expects SUITE=N with SUITE in {', '.join(SUITE_NAMES)}")
        try:
            limits = replace(limits, **{name: int(value)})
        except ValueError:
            raise UsageError(f"--limit {item}: N must be an integer") from None
    if args.max_n is not None:
        if args.suite == "all":
            raise UsageError("--max-n needs a single --suite; use --limit SUITE=N with 'all'")
        limits = replace(limits, **{args.suite: args.max_n})
    return names, limits


def cmd_verify(args, out: TextIO) -> int:
    if args.suite != "all" and args.suite not in SUITE_NAMES:
        raise UsageError(f"unknown suite {args.suite!r}; known: {', '.join(SUITE_NAMES)}, all")
    names, limits = _parse_limit_overrides(args)
    reports = run_all(limits, names, workers=args.workers)
    if args.format == "json":
        out.write(reports_to_json(reports, timing=not args.no_timing))
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["suite", "status", "parameter_range", "cases_run", "failures", "elapsed"])
        for r in reports:
            w.writerow([r.suite_name, r.status, r.parameter_range, r.cases_run,
                        len(r.failures), "" if args.no_timing else r.elapsed])
    else:
        for r in reports:
            timing = "" if args.no_timing else f" ({r.elapsed:.2f}s)"
            out.write(f"{r.status.upper():8s} {r.suite_name:9s} {r.parameter_range}: "
                      f"{r.cases_run} cases{timing}\n")
            if r.error:
                out.write(f"  error: {r.error}\n")
            for f in r.failures:
                d = f.to_dict()
                out.write(f"  {d['params']}: lhs={d['lhs']} rhs={d['rhs']}\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILURE


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="racahkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, required=True)

    def add_format(p):
        p.add_argument("--format", choices=("human", "json", "csv"), default="human")

    p = sub.add_parser("hyp", help="evaluate a terminating pFq exactly")
    p.add_argument("--num", required=True, help="comma-separated numerator parameters")
    p.add_argument("--den", default="", help="comma-separated denominator parameters")
    p.add_argument("--z", default="1", help="argument (default 1)")
    p.add_argument("--decimal-digits", type=int, default=None)
    add_format(p)
    p.set_defaults(func=cmd_hyp)

    p = sub.add_parser("transform", help="apply a sequence transform to a sequence file")
    p.add_argument("input", nargs="?", default=None, help="sequence file (default stdin)")
    p.add_argument("--direction", choices=tuple(DIRECTIONS), default="forward")
    add_format(p)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("racah", help="evaluate R_n(s,T)")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-s", type=int, required=True)
    p.add_argument("-T", type=int, required=True)
    p.add_argument("--decimal-digits", type=int, default=None)
    add_format(p)
    p.set_defaults(func=cmd_racah)

    p = sub.add_parser("racah-table", help="the full T x T grid of R_n(s,T)")
    p.add_argument("-T", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_racah_table)

    p = sub.add_parser("sweep", help="check |R_n(s,T)| <= 1 over a range of T")
    p.add_argument("--t-min", type=int, required=True)
    p.add_argument("--t-max", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--grid-dump", default=None, metavar="PATH",
                   help="also write every cell as CSV to PATH")
    add_format(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run exact verification suites")
    p.add_argument("--suite", default="all", help=f"one of {', '.join(SUITE_NAMES)}, or all")
    p.add_argument("--max-n", type=int, default=None, help="size limit for the chosen suite")
    p.add_argument("--limit", action="append", default=[], metavar="SUITE=N")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--no-timing", action="store_true", help="omit elapsed times")
    add_format(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except _UsageExit:
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    if getattr(args, "decimal_digits", None) is not None and args.decimal_digits < 0:
        print("racahkit: error: --decimal-digits must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    if getattr(args, "workers", 1) < 1:
        print("racahkit: error: --workers must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"racahkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"racahkit: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
