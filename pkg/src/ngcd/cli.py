"""Command-line front end: ``compute``, ``verify`` and ``bench``.

Exit codes: 0 ok, 2 parse/usage error, 3 empty input, 4 mismatch.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence, TextIO

from . import __version__
from .bench import DISTRIBUTIONS, BenchConfig, ConfigError, GcdMismatchError, run_campaign
from .core import ALGORITHMS, TraceEvent
from .oracle import OracleBoundError, oracle_gcd_bruteforce, oracle_gcd_factorization

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_EMPTY = 3
EXIT_MISMATCH = 4


class InputError(ValueError):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


_DIGITS = {10: set("0123456789"), 16: set("0123456789abcdefABCDEF")}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_token(token: str, position: int, hex_radix: bool = False) -> int:
    """Parse one decimal or 0x-hex token; ``hex_radix`` reads bare tokens as hex."""
    if token[:2].lower() == "0x":
        digits, base = token[2:], 16
    else:
        digits, base = token, 16 if hex_radix else 10
    if not digits or not set(digits) <= _DIGITS[base]:
        raise InputError(f"invalid number {token!r} at position {position}")
    return int(digits, base)


def read_numbers(args: argparse.Namespace, stdin: TextIO) -> list[int]:
    if args.numbers and args.input:
        raise InputError("give numbers either as arguments or with --input, not both")
    if args.numbers:
        tokens = list(args.numbers)
    else:
        if args.input and args.input != "-":
            try:
                with open(args.input) as fh:
                    text = fh.read()
            except OSError as e:
                raise InputError(f"cannot read {args.input}: {e.strerror}") from None
        elif args.input == "-" or not stdin.isatty():
            text = stdin.read()
        else:
            text = ""
        tokens = text.split()
    values = [parse_token(tok, i + 1, args.hex) for i, tok in enumerate(tokens)]
    if not values:
        raise InputError("no input numbers", EXIT_EMPTY)
    return values


def trace_record(index: int, event: TraceEvent) -> str:
    rec = {
        "step": index,
        "kind": event.kind,
        "state": [str(v) for v in event.state],
        "p": event.p,
    }
    if event.pivot is not None:
        rec["pivot"] = event.pivot
    if event.result is not None:
        rec["result"] = str(event.result)
    return json.dumps(rec)


def cmd_compute(args, stdin, out) -> int:
    xs = read_numbers(args, stdin)
    res = ALGORITHMS[args.alg](xs, trace=args.trace)
    out.write(f"{res.gcd}\n")
    if args.trace:
        for i, ev in enumerate(res.trace or []):
            out.write(trace_record(i, ev) + "\n")
    return EXIT_OK


def cmd_verify(args, stdin, out) -> int:
    xs = read_numbers(args, stdin)
    try:
        oracles = {
            "oracle-factorization": oracle_gcd_factorization(xs),
            "oracle-bruteforce": oracle_gcd_bruteforce(xs),
        }
    except OracleBoundError as e:
        raise InputError(f"input outside oracle bounds, verify refuses it: {e}") from None
    results = {name: fn(xs).gcd for name, fn in ALGORITHMS.items()}
    results.update(oracles)
    agree = len(set(results.values())) == 1
    width = max(map(len, results))
    for name, value in results.items():
        out.write(f"{name.ljust(width)}  {value}\n")
    out.write("agree\n" if agree else "MISMATCH\n")
    return EXIT_OK if agree else EXIT_MISMATCH


def cmd_bench(args, stdin, out) -> int:
    algs = tuple(a.strip() for a in args.algs.split(",")) if args.algs else tuple(ALGORITHMS)
    try:
        cfg = BenchConfig(
            seed=args.seed, n=args.n, bits=args.bits, distribution=args.dist,
            trials=args.trials, algorithms=algs, factor=args.factor, workers=args.workers,
        )
    except ConfigError as e:
        raise InputError(f"invalid bench configuration: {e}") from None
    try:
        report = run_campaign(cfg)
    except GcdMismatchError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_MISMATCH
    out.write(report.to_json_lines() if args.format == "json-lines" else report.to_table())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ngcd", description="GCD of n non-negative integers.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_input(p):
        p.add_argument("numbers", nargs="*", help="integers (decimal or 0x-hex)")
        p.add_argument("--input", metavar="FILE", help="read whitespace-separated integers from FILE ('-' for stdin)")
        p.add_argument("--hex", action="store_true", help="read tokens as hexadecimal")

    p = sub.add_parser("compute", help="print the GCD of the input numbers")
    p.add_argument("--alg", choices=list(ALGORITHMS), default="gcd-n")
    p.add_argument("--trace", action="store_true", help="print one JSON record per reduction step")
    add_input(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="cross-check every algorithm against both oracles")
    add_input(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="compare operation counts on generated inputs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--bits", type=int, default=64)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--dist", choices=DISTRIBUTIONS, default="uniform-random")
    p.add_argument("--factor", type=int, default=21, help="planted factor for --dist common-factor")
    p.add_argument("--algs", help=f"comma-separated subset of {','.join(ALGORITHMS)}")
    p.add_argument("--format", choices=("table", "json-lines"), default="table")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None, stdin: Optional[TextIO] = None,
         stdout: Optional[TextIO] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    try:
        return args.func(args, stdin, stdout)
    except InputError as e:
        sys.stderr.write(f"ngcd {args.command}: {e}\n")
        return e.code


def run() -> None:
    sys.exit(main())
