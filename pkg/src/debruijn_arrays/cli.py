"""Command-line driver.

Subcommands: construct, verify, sequence, count, enumerate.

Exit codes: 0 ok/valid, 1 property-invalid, 2 usage error or malformed
input, 3 search truncated by limit/budget, 4 internal inconsistency
(count methods disagree).
"""

from __future__ import annotations

import argparse
import json
import sys

from .construct import construct_l_array
from .errors import (BudgetError, DimensionError, DomainError, GridParseError)
from .grid import DigitGrid, parse_grid_json, parse_grid_text
from .search import SearchConfig, default_workers, enumerate_l_arrays
from .sequences import (count_best, count_brute, count_formula,
                        format_word, generate_sequence, parse_word)
from .verify import verify_l_array, verify_sequence, verify_torus

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_TRUNCATED = 3
EXIT_INCONSISTENT = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="debruijn-arrays",
        description="Construct, verify, count, and enumerate de Bruijn "
                    "sequences, tori, and L-arrays.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="print the modular k-de Bruijn L-array")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="verify a grid or sequence from a file or stdin")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--shape", nargs="+", required=True,
                   metavar="SHAPE",
                   help="'l-array', 'torus M N', or 'sequence N'")
    p.add_argument("--format", choices=("text", "json"), default="text",
                   help="input format for grids")
    p.add_argument("input", nargs="?", default="-",
                   help="input file, or '-' for stdin (default)")

    p = sub.add_parser("sequence", help="generate a (k,n)-de Bruijn sequence")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("euler", "greedy"), default="euler")

    p = sub.add_parser("count", help="count (k,n)-de Bruijn sequences exactly")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("formula", "best", "brute", "all"),
                   default="formula")

    p = sub.add_parser("enumerate", help="enumerate all k-de Bruijn L-arrays")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--symmetry",
                   choices=("none", "translations", "translations+relabel"),
                   default="none")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--time-budget", type=float, default=None,
                   help="wall-clock cap in seconds")
    p.add_argument("--workers", type=int, default=None,
                   help="search workers (default: DEBRUIJN_ARRAYS_WORKERS or 1)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--report-file", default=None,
                   help="write the JSON search report here instead of stderr")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "construct":
            return _run_construct(args)
        if args.command == "verify":
            return _run_verify(args)
        if args.command == "sequence":
            return _run_sequence(args)
        if args.command == "count":
            return _run_count(args)
        if args.command == "enumerate":
            return _run_enumerate(args)
    except (DomainError, BudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    raise AssertionError("unreachable")


def _run_construct(args) -> int:
    g = construct_l_array(args.k)
    if args.format == "json":
        print(g.to_json())
    else:
        sys.stdout.write(g.to_text())
    return EXIT_OK


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


_SHAPE_ARITY = {"l-array": 1, "torus": 3, "sequence": 2}


def _run_verify(args) -> int:
    # greedy --shape parsing swallows a trailing input path; each shape kind
    # has a fixed arity, so one extra token is the input file
    shape = list(args.shape)
    kind = shape[0]
    arity = _SHAPE_ARITY.get(kind)
    if arity is None:
        print(f"error: unknown shape {kind!r}", file=sys.stderr)
        return EXIT_USAGE
    if len(shape) == arity + 1 and args.input == "-":
        args.input = shape.pop()
    args.shape = shape
    try:
        text = _read_input(args.input)
    except OSError as exc:
        print(f"error: cannot read input: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        if kind == "l-array":
            if len(args.shape) != 1:
                raise DomainError("--shape l-array takes no extra arguments")
            parse = parse_grid_json if args.format == "json" else parse_grid_text
            k_in, rows = parse(text)
            if k_in != args.k:
                raise GridParseError(f"input declares k={k_in}, but --k {args.k} given")
            grid = DigitGrid(args.k, rows)
            report = verify_l_array(grid)
        elif kind == "torus":
            if len(args.shape) != 3:
                raise DomainError("--shape torus needs window dims: torus M N")
            m, n = int(args.shape[1]), int(args.shape[2])
            parse = parse_grid_json if args.format == "json" else parse_grid_text
            k_in, rows = parse(text)
            if k_in != args.k:
                raise GridParseError(f"input declares k={k_in}, but --k {args.k} given")
            report = verify_torus(rows, args.k, m, n)
        elif kind == "sequence":
            if len(args.shape) != 2:
                raise DomainError("--shape sequence needs a window length: sequence N")
            n = int(args.shape[1])
            report = verify_sequence(parse_word(text, args.k), args.k, n)
        else:
            raise DomainError(f"unknown shape {kind!r}")
    except (GridParseError, DimensionError, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    print(json.dumps(report.to_json_dict(), separators=(", ", ": ")))
    return EXIT_OK if report.valid else EXIT_INVALID


def _run_sequence(args) -> int:
    word = generate_sequence(args.k, args.n, args.method)
    print(word)
    return EXIT_OK


def _run_count(args) -> int:
    methods = {"formula": count_formula, "best": count_best, "brute": count_brute}
    if args.method == "all":
        values = {}
        for name, fn in methods.items():
            try:
                values[name] = fn(args.k, args.n)
            except BudgetError as exc:
                print(f"note: {name} skipped: {exc}", file=sys.stderr)
        if len(set(values.values())) > 1:
            print(f"error: count methods disagree: {values}", file=sys.stderr)
            return EXIT_INCONSISTENT
        print(next(iter(values.values())))
        return EXIT_OK
    print(methods[args.method](args.k, args.n))
    return EXIT_OK


def _run_enumerate(args) -> int:
    cfg = SearchConfig(k=args.k, symmetry=args.symmetry, limit=args.limit,
                       time_budget=args.time_budget)
    workers = args.workers if args.workers is not None else default_workers()
    solutions, report = enumerate_l_arrays(cfg, workers=workers)
    if args.format == "json":
        print(json.dumps([{"k": g.k, "rows": [list(r) for r in g.rows]}
                          for g in solutions], separators=(", ", ": ")))
    else:
        for i, g in enumerate(solutions):
            if i:
                print()
            sys.stdout.write(g.to_text())
    report_json = json.dumps(report.to_json_dict(), separators=(", ", ": "))
    if args.report_file:
        with open(args.report_file, "w", encoding="utf-8") as fh:
            fh.write(report_json + "\n")
    else:
        print(report_json, file=sys.stderr)
    return EXIT_OK if report.complete else EXIT_TRUNCATED


if __name__ == "__main__":
    sys.exit(main())
