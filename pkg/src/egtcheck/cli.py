"""Command line: ``egtcheck {solve,verify,enumerate,construct}``.

Exit status: 0 when every check holds, 2 when a conjecture counterexample was
found (certificate on stderr and in the summary), 1 on malformed input or a
failed proved bound.
"""

from __future__ import annotations

import argparse
import csv
import logging
import sys
from contextlib import nullcontext
from typing import IO, Iterator, Sequence

from .bounds import CHECK_NAMES, csv_columns
from .enumerate import enumerate_stream
from .graph import Graph
from .graph6 import Graph6Error, decode, write_stream
from .harness import (
    FAMILIES,
    RunConfig,
    SolvedGraph,
    TheoremFailure,
    builtin_graphs,
    dumps,
    parse_records,
    run_construct,
    run_verify,
    solve_many,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_COUNTEREXAMPLE = 2


def parse_n_range(text: str) -> tuple[int, int]:
    """``"8"`` -> (8, 8); ``"1..7"`` -> (1, 7)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        return int(text), int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None


def parse_checks(text: str) -> tuple[str, ...]:
    if text == "all":
        return CHECK_NAMES
    names = tuple(t.strip() for t in text.split(",") if t.strip())
    bad = [t for t in names if t not in CHECK_NAMES]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown check(s) {bad}; choose from {', '.join(CHECK_NAMES)} or all")
    return names


def parse_params(values: Sequence[str]) -> list[int]:
    out = []
    for v in values:
        out += [int(p) for p in v.split(",") if p]
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="egtcheck",
        description="Exact alpha_1, tau, tau_B, b for small graphs and exhaustive bound checks.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve every graph6 record of a stream")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--input", default="-", help="graph6 file, one record per line ('-' = stdin)")
    src.add_argument("--graph", help="a single graph6 record")
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    p.add_argument("--check", type=parse_checks, default=CHECK_NAMES, help="comma list or 'all'")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--fail-fast", action="store_true", help="stop at the first malformed record")
    p.add_argument("--bip-trials", type=int, default=0,
                   help="also run this many randomized bipartization trials per graph")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized bipartization")

    p = sub.add_parser("verify", help="sweep all graphs and tally every check")
    p.add_argument("--n", type=parse_n_range, help="vertex counts, N or A..B")
    p.add_argument("--input", help="graph6 stream instead of the built-in enumerator")
    p.add_argument("--check", type=parse_checks, default=CHECK_NAMES, help="comma list or 'all'")
    p.add_argument("--format", choices=("summary", "jsonl", "csv"), default="summary")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--fail-fast", action="store_true", help="stop at the first counterexample")

    p = sub.add_parser("enumerate", help="write all non-isomorphic graphs on n vertices as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", help="output file (default stdout)")

    p = sub.add_parser("construct", help="emit a named extremal graph")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--params", nargs="+", required=True, help="integers, space or comma separated")
    p.add_argument("--format", choices=("jsonl", "graph6"), default="jsonl")
    return parser


def _open_in(path: str) -> IO[bytes]:
    return sys.stdin.buffer if path == "-" else open(path, "rb")


class _BadInput(Exception):
    pass


def _graphs_from(stream: IO[bytes], fail_fast: bool, errors: list[str],
                 n_range: tuple[int, int] | None = None) -> Iterator[Graph]:
    for lineno, item in parse_records(stream):
        if isinstance(item, Graph6Error):
            msg = f"line {lineno}: {item}"
            errors.append(msg)
            print(f"egtcheck: malformed graph6 record, {msg}", file=sys.stderr)
            if fail_fast:
                raise _BadInput(msg)
            continue
        if n_range is None or n_range[0] <= item.n <= n_range[1]:
            yield item


class _Writer:
    def __init__(self, fmt: str, out: IO[str], check_names: tuple[str, ...]):
        self.fmt = fmt
        self.out = out
        self.csv = None
        if fmt == "csv":
            self.csv = csv.DictWriter(out, fieldnames=csv_columns(check_names), lineterminator="\n",
                                      extrasaction="ignore")
            self.csv.writeheader()

    def __call__(self, solved: SolvedGraph) -> None:
        if self.csv is not None:
            self.csv.writerow(solved.report.csv_row())
        elif self.fmt == "jsonl":
            self.out.write(dumps(solved.as_dict()) + "\n")


def cmd_solve(args: argparse.Namespace) -> int:
    config = RunConfig(command="solve", input_path=None if args.graph else args.input, graph6=args.graph,
                       checks=args.check, output_format=args.format, jobs=args.jobs,
                       seed=args.seed, fail_fast=args.fail_fast, bip_trials=args.bip_trials)
    errors: list[str] = []
    write = _Writer(config.output_format, sys.stdout, config.checks)
    if config.graph6 is not None:
        try:
            graphs: Iterator[Graph] = iter([decode(config.graph6)])
        except Graph6Error as exc:
            print(f"egtcheck: malformed graph6 record: {exc}", file=sys.stderr)
            return EXIT_FAILURE
        ctx = nullcontext()
    else:
        stream = _open_in(config.input_path or "-")
        ctx = stream if stream is not sys.stdin.buffer else nullcontext()
        graphs = _graphs_from(stream, config.fail_fast, errors)
    with ctx:
        try:
            for solved in solve_many(graphs, config.checks, config.jobs, config.bip_trials, config.seed):
                write(solved)
        except _BadInput:
            return EXIT_FAILURE
    return EXIT_FAILURE if errors else EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        config = RunConfig(command="verify", n_range=args.n, input_path=args.input, checks=args.check,
                           output_format=args.format, jobs=args.jobs, fail_fast=args.fail_fast)
    except ValueError as exc:
        print(f"egtcheck: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    errors: list[str] = []
    if config.input_path is not None:
        stream = _open_in(config.input_path)
        ctx = stream if stream is not sys.stdin.buffer else nullcontext()
        graphs = _graphs_from(stream, False, errors, config.n_range)
    else:
        assert config.n_range is not None
        ctx = nullcontext()
        graphs = builtin_graphs(*config.n_range)

    write = _Writer(config.output_format, sys.stdout, config.checks)
    with ctx:
        try:
            summary = run_verify(graphs, config.checks, config.jobs, config.fail_fast, on_report=write)
        except TheoremFailure as exc:
            print(f"egtcheck: {exc}", file=sys.stderr)
            print(dumps(exc.certificate), file=sys.stderr)
            return EXIT_FAILURE
    for cert in summary.certificates:
        print("counterexample " + dumps(cert), file=sys.stderr)
    if config.output_format == "summary":
        sys.stdout.write(dumps(summary.as_dict()) + "\n")
    print(
        f"egtcheck: {summary.graphs_processed} graphs, {len(summary.counterexamples)} counterexamples, "
        f"{summary.wall_time:.1f}s",
        file=sys.stderr,
    )
    if errors:
        return EXIT_FAILURE
    return summary.exit_status


def cmd_enumerate(args: argparse.Namespace) -> int:
    try:
        graphs = enumerate_stream(args.n)
    except ValueError as exc:
        print(f"egtcheck: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    with open(args.out, "wb") if args.out else nullcontext(sys.stdout.buffer) as out:
        count = write_stream(out, graphs)
    print(f"egtcheck: {count} graphs on {args.n} vertices", file=sys.stderr)
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    try:
        built = run_construct(args.family, parse_params(args.params))
    except ValueError as exc:
        print(f"egtcheck: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    if args.format == "graph6":
        print(built["graph6"])
    else:
        print(dumps(built))
    return EXIT_OK


COMMANDS = {"solve": cmd_solve, "verify": cmd_verify, "enumerate": cmd_enumerate, "construct": cmd_construct}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
