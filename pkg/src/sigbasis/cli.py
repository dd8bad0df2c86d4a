"""Command-line front end: ``gb``, ``verify`` and ``bench``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional

from .baseline import buchberger
from .bench import ALGORITHMS, FAMILIES, BenchSpec, run_bench
from .order import ORDER_KINDS
from .poly import autoreduce
from .sigcore import REWRITE_KINDS, gb_sig
from .textio import ParseError, SystemFile, format_poly, parse_system
from .verify import cross_check

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _add_config(p: argparse.ArgumentParser) -> None:
    p.add_argument("--order", choices=ORDER_KINDS, default="degrevlex")
    p.add_argument("--module-order", choices=("pot", "top"), default="pot")
    p.add_argument("--rewrite", choices=REWRITE_KINDS, default="rat")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sigbasis", description="Signature-based Gröbner bases over Q.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gb = sub.add_parser("gb", help="compute a Gröbner basis of the system in FILE ('-' for stdin)")
    gb.add_argument("file")
    _add_config(gb)
    gb.add_argument("--algorithm", choices=ALGORITHMS, default="sig")
    gb.add_argument("--reduced", action="store_true", help="print the reduced basis")
    gb.add_argument("--stats", action="store_true", help="append a JSON statistics line")

    ver = sub.add_parser("verify", help="cross-check gb_sig against Buchberger on FILE")
    ver.add_argument("file")
    _add_config(ver)
    ver.add_argument("--json", action="store_true", help="print the report as JSON")

    bench = sub.add_parser("bench", help="run a named benchmark system")
    bench.add_argument("--family", choices=FAMILIES, required=True)
    bench.add_argument("--n", type=int, required=True)
    _add_config(bench)
    bench.add_argument("--algorithm", choices=ALGORITHMS, default="sig")
    bench.add_argument("--json", action="store_true", help="print the record as one JSON object")
    return parser


def _load(path: str, order: str) -> SystemFile:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return parse_system(text, order)


def _cmd_gb(args) -> int:
    system = _load(args.file, args.order)
    start = time.perf_counter()
    if args.algorithm == "sig":
        basis, zeros = gb_sig(system.polynomials, args.order, args.module_order, args.rewrite)
    else:
        basis, zeros = buchberger(system.polynomials, args.order)
    elapsed = time.perf_counter() - start
    if args.reduced:
        basis = autoreduce(basis, groebner=True)
    for g in basis:
        print(format_poly(g, system.variables))
    if args.stats:
        print(json.dumps({
            "order": args.order, "module_order": args.module_order, "rewrite": args.rewrite,
            "algorithm": args.algorithm, "basis_size": len(basis), "zero_reductions": zeros,
            "time_ms": int(round(elapsed * 1000)),
        }))
    return EXIT_OK


def _cmd_verify(args) -> int:
    system = _load(args.file, args.order)
    report = cross_check(system.polynomials, args.order, args.module_order, args.rewrite)
    print(json.dumps(report.to_dict()) if args.json else report)
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_bench(args) -> int:
    try:
        spec = BenchSpec(args.family, args.n, args.order, args.module_order, args.rewrite, args.algorithm)
    except ValueError as exc:
        print(f"sigbasis bench: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    record = run_bench(spec)
    if args.json:
        print(json.dumps(record))
    else:
        print(f"{spec.family}-{spec.n} [{spec.order}, {spec.module_order}, {spec.rewrite}, {spec.algorithm}]: "
              f"{record['basis_size']} elements, {record['zero_reductions']} zero-reductions, "
              f"{record['time_ms']} ms")
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return {"gb": _cmd_gb, "verify": _cmd_verify, "bench": _cmd_bench}[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
