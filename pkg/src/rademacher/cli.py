"""Command line front end: compute single values, stream tables, run the
self-check suites, benchmark the series against the exact expansion, and
export oracle coefficient files.

All values go to standard out; diagnostics go to standard error.  Output
for fixed flags is byte-deterministic (the bench timings excepted, being
measurements).  Exit codes: 0 success, 1 mismatch or uncertified result
or failed check, 2 usage.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass

from mpmath import mp

from .oracle import expand_fr
from .series import R_MAX, SeriesParams, SeriesResult, p_r_series
from .verify import SUITES, run_suites

__all__ = ["OutputRecord", "main"]


@dataclass(frozen=True)
class OutputRecord:
    """One printable result row.

    value is carried as a full decimal string (the integers outgrow any
    fixed-width type quickly); residual is scientific notation with three
    significant digits; status "oracle" marks values that came from
    coefficient extraction rather than the series.
    """

    n: int
    r: int
    value: str
    terms_used: int
    precision_bits: int
    residual: str
    status: str

    @classmethod
    def from_series(cls, result: SeriesResult, n: int, r: int) -> "OutputRecord":
        return cls(n, r, result.value and str(result.value) or str(result.value),
                   result.terms_used, result.precision_used,
                   _sci(result.residual), result.status)

    @classmethod
    def from_oracle(cls, value: int, n: int, r: int) -> "OutputRecord":
        return cls(n, r, str(value), 0, 0, "0", "oracle")

    def as_fields(self) -> tuple:
        return (self.n, self.r, self.value, self.terms_used,
                self.precision_bits, self.residual, self.status)


def _sci(residual) -> str:
    """Three significant digits, scientific notation; exact zero prints 0."""
    if residual == 0:
        return "0"
    return mp.nstr(residual, 3, min_fixed=1, max_fixed=0)


CSV_HEADER = "n,r,value,terms,precision,residual,status"


def _env_precision() -> int | None:
    raw = os.environ.get("RADEMACHER_PRECISION")
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(
            f"error: RADEMACHER_PRECISION must be an integer, got {raw!r}")


def _series_record(r: int, n: int, terms, precision) -> OutputRecord:
    result = p_r_series(SeriesParams(r=r, n=n, terms=terms, precision=precision))
    return OutputRecord.from_series(result, n, r)


def _print_record(rec: OutputRecord) -> None:
    print(f"n={rec.n} r={rec.r} value={rec.value} terms={rec.terms_used} "
          f"precision={rec.precision_bits} residual={rec.residual} "
          f"status={rec.status}")


def cmd_compute(args) -> int:
    precision = args.precision if args.precision is not None else _env_precision()
    rc = 0
    series_rec = oracle_rec = None
    if args.method in ("series", "both"):
        series_rec = _series_record(args.r, args.n, args.terms, precision)
        _print_record(series_rec)
        if series_rec.status == "uncertified":
            rc = 1
    if args.method in ("oracle", "both"):
        value = expand_fr(args.r, args.n)[args.n]
        oracle_rec = OutputRecord.from_oracle(value, args.n, args.r)
        _print_record(oracle_rec)
    if args.method == "both":
        if series_rec.value == oracle_rec.value:
            print("MATCH")
        else:
            print("MISMATCH")
            rc = 1
    return rc


def cmd_table(args) -> int:
    precision = args.precision if args.precision is not None else _env_precision()
    records = []
    for n in range(args.n_max + 1):
        if n == 0:
            records.append(OutputRecord.from_oracle(expand_fr(args.r, 0)[0], 0, args.r))
        else:
            records.append(_series_record(args.r, n, args.terms, precision))
    rc = 1 if any(rec.status == "uncertified" for rec in records) else 0
    if args.format == "csv":
        print(CSV_HEADER)
        for rec in records:
            print(",".join(str(x) for x in rec.as_fields()))
    elif args.format == "tsv":
        print(CSV_HEADER.replace(",", "\t"))
        for rec in records:
            print("\t".join(str(x) for x in rec.as_fields()))
    else:  # json-lines
        for rec in records:
            print(json.dumps({
                "n": rec.n, "r": rec.r, "value": rec.value,
                "terms": rec.terms_used, "precision": rec.precision_bits,
                "residual": rec.residual, "status": rec.status,
            }))
    return rc


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = run_suites(names)
    failed = 0
    for res in results:
        mark = "PASS" if res.passed else "FAIL"
        print(f"{mark} {res.name}: {res.detail}")
        failed += not res.passed
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 1 if failed else 0


def cmd_bench(args) -> int:
    precision = args.precision if args.precision is not None else _env_precision()
    n_list = sorted(set(args.n_list))
    print(f"{'n':>10} {'series_ms':>12} {'oracle_ms':>12} {'terms':>7} "
          f"{'bits':>6} agree")
    rc = 0
    for n in n_list:
        t0 = time.perf_counter()
        result = p_r_series(SeriesParams(r=args.r, n=n, precision=precision))
        t_series = (time.perf_counter() - t0) * 1000
        t0 = time.perf_counter()
        table = expand_fr(args.r, n)
        t_oracle = (time.perf_counter() - t0) * 1000
        agree = result.value == table[n] and result.status != "uncertified"
        if not agree:
            rc = 1
        print(f"{n:>10} {t_series:>12.2f} {t_oracle:>12.2f} "
              f"{result.terms_used:>7} {result.precision_used:>6} "
              f"{'yes' if agree else 'NO'}")
    return rc


def cmd_oracle(args) -> int:
    table = expand_fr(args.r, args.limit)
    if args.out:
        with open(args.out, "w") as fh:
            table.dump(fh)
        print(f"wrote {len(table)} coefficients to {args.out}", file=sys.stderr)
    else:
        table.dump(sys.stdout)
    return 0


def _parse_n_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma list of integers: {text!r}")
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("n list must hold positive integers")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rademacher",
        description="Certified evaluation of the convergent partition series "
                    "p_r(n), r = 0..4, with exact oracles and self checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="one value of p_r(n)")
    pc.add_argument("-r", type=int, required=True, help="series index, 0..4")
    pc.add_argument("-n", type=int, required=True, help="target index, n >= 0")
    pc.add_argument("--terms", type=int, help="truncation point K (default auto)")
    pc.add_argument("--precision", type=int, help="working precision in bits (default auto)")
    pc.add_argument("--method", choices=("series", "oracle", "both"),
                    default="series")
    pc.set_defaults(func=cmd_compute)

    pt = sub.add_parser("table", help="stream p_r(0..n_max)")
    pt.add_argument("-r", type=int, required=True)
    pt.add_argument("--n-max", type=int, required=True)
    pt.add_argument("--terms", type=int)
    pt.add_argument("--precision", type=int)
    pt.add_argument("--format", choices=("csv", "tsv", "json-lines"),
                    default="csv")
    pt.set_defaults(func=cmd_table)

    pv = sub.add_parser("verify", help="run the self-check suites")
    pv.add_argument("--suite", choices=tuple(SUITES) + ("all",), default="all")
    pv.set_defaults(func=cmd_verify)

    pb = sub.add_parser("bench", help="series vs oracle timings")
    pb.add_argument("-r", type=int, required=True)
    pb.add_argument("-n", "--n-list", dest="n_list", type=_parse_n_list,
                    required=True, help="comma-separated n values")
    pb.add_argument("--precision", type=int)
    pb.set_defaults(func=cmd_bench)

    po = sub.add_parser("oracle", help="export exact coefficients, one per line")
    po.add_argument("-r", type=int, required=True)
    po.add_argument("-N", "--limit", dest="limit", type=int, required=True,
                    help="largest exponent to export")
    po.add_argument("--out", help="output path (default stdout)")
    po.set_defaults(func=cmd_oracle)
    return parser


def _validate(parser: argparse.ArgumentParser, args) -> None:
    if args.command in ("compute", "table", "bench", "oracle"):
        if args.r < 0:
            parser.error("r must be nonnegative")
    if args.command in ("compute", "table", "bench"):
        needs_series = getattr(args, "method", "series") != "oracle"
        if needs_series and args.r > R_MAX:
            parser.error(f"the series handles r <= {R_MAX}; "
                         f"use --method oracle for larger r")
    if args.command == "compute" and args.n < 0:
        parser.error("n must be nonnegative")
    if args.command == "table" and args.n_max < 0:
        parser.error("n-max must be nonnegative")
    if args.command == "oracle" and args.limit < 0:
        parser.error("limit must be nonnegative")
    precision = getattr(args, "precision", None)
    if precision is not None and precision < 64:
        parser.error("precision must be at least 64 bits")
    terms = getattr(args, "terms", None)
    if terms is not None and terms < 1:
        parser.error("terms must be positive")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
