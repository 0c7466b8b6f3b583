"""Solve, certify and aggregate over streams of graphs.

Work is farmed out per graph; ``Pool.imap`` keeps results in input order so
output does not depend on the number of workers.
"""

from __future__ import annotations

import json
import multiprocessing
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator

from . import solvers
from .bounds import (
    CHECK_NAMES,
    CONJECTURE,
    THEOREM,
    BoundReport,
    JoinProfile,
    evaluate,
)
from .enumerate import enumerate_stream
from .graph import Graph, complete, complete_bipartite, cycle, is_triangle_independent
from .graph6 import Graph6Error, decode, encode, read_lines

BUILTIN_MAX_N = 8


class TheoremFailure(RuntimeError):
    """A proved inequality or characterization failed: the artifact has a bug."""

    def __init__(self, message: str, certificate: dict[str, Any]):
        super().__init__(message)
        self.certificate = certificate


@dataclass
class RunConfig:
    command: str = "verify"
    n_range: tuple[int, int] | None = None
    input_path: str | None = None
    graph6: str | None = None
    checks: tuple[str, ...] = CHECK_NAMES
    output_format: str = "summary"
    jobs: int = 1
    seed: int = 0
    fail_fast: bool = False
    bip_trials: int = 0

    def __post_init__(self) -> None:
        if self.input_path is not None and self.graph6 is not None:
            raise ValueError("give either an input stream or a single graph6 record, not both")
        if self.command == "verify" and self.n_range is None and self.input_path is None:
            raise ValueError("verify needs --n or an input stream")
        unknown = set(self.checks) - set(CHECK_NAMES)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        if self.n_range is not None:
            lo, hi = self.n_range
            if lo < 1 or hi < lo:
                raise ValueError(f"bad n range {lo}..{hi}")
            if self.input_path is None and hi > BUILTIN_MAX_N:
                raise ValueError(
                    f"built-in enumeration sweeps n <= {BUILTIN_MAX_N}; feed larger n as a graph6 stream"
                )


@dataclass
class SolvedGraph:
    """Report plus the optional randomized-bipartization figures for one graph."""

    report: BoundReport
    bipartization: dict[str, Any] | None = None

    def as_dict(self) -> dict[str, Any]:
        out = self.report.as_dict()
        if self.bipartization is not None:
            out["bipartization"] = self.bipartization
        return out


def solve_graph(
    g: Graph, checks: tuple[str, ...] = CHECK_NAMES, bip_trials: int = 0, seed: int = 0
) -> SolvedGraph:
    """All four parameters, every requested check, and the witness invariants."""
    a = solvers.alpha1(g)
    t = solvers.tau(g)
    tb = solvers.tau_b(g)
    bv = solvers.b(g)
    report = evaluate(g, a.value, t.value, tb.value, bv.value, witness=a.witness, check_names=checks)
    extra = None
    if bip_trials > 0 and g.n > 0:
        mean, best = solvers.randomized_bipartization(g, bv.witness, bip_trials, seed)
        derand = solvers.derandomized_bipartization(g, bv.witness)
        extra = {
            "trials": bip_trials,
            "seed": seed,
            "mean_deleted": mean,
            "best_deleted": len(best),
            "derandomized_deleted": len(derand),
            "outside_edges": solvers.outside_edge_count(g, bv.witness),
        }
    return SolvedGraph(report, extra)


def _solve_record(args: tuple[bytes, tuple[str, ...], int, int]) -> SolvedGraph:
    record, checks, trials, seed = args
    return solve_graph(decode(record), checks, trials, seed)


def solve_many(
    graphs: Iterable[Graph],
    checks: tuple[str, ...] = CHECK_NAMES,
    jobs: int = 1,
    bip_trials: int = 0,
    seed: int = 0,
) -> Iterator[SolvedGraph]:
    """Solve a stream of graphs, in input order."""
    if jobs == 1:
        for g in graphs:
            yield solve_graph(g, checks, bip_trials, seed)
        return
    work = ((encode(g), checks, bip_trials, seed) for g in graphs)
    with multiprocessing.Pool(jobs) as pool:
        yield from pool.imap(_solve_record, work, chunksize=32)


def certificate(report: BoundReport, failing: list[str]) -> dict[str, Any]:
    """Self-contained evidence for a failed check, re-verifiable from the graph6 alone."""
    return {
        "graph6": report.graph6,
        "n": report.n,
        "m": report.m,
        "alpha1": report.alpha1,
        "tau": report.tau,
        "tau_b": report.tau_b,
        "b": report.b_val,
        "violated": {name: report.checks[name].as_dict() for name in failing},
    }


@dataclass
class CheckCounts:
    holds: int = 0
    tight: int = 0
    fails: int = 0


@dataclass
class SweepSummary:
    graphs_processed: int = 0
    per_n: dict[int, int] = field(default_factory=dict)
    checks: dict[str, CheckCounts] = field(default_factory=dict)
    counterexamples: list[str] = field(default_factory=list)
    certificates: list[dict[str, Any]] = field(default_factory=list)
    equality_tight: int = 0
    join_recognized: int = 0
    wall_time: float = 0.0

    def record(self, report: BoundReport) -> list[str]:
        """Tally one report; return the names of the conjecture checks it fails."""
        self.graphs_processed += 1
        self.per_n[report.n] = self.per_n.get(report.n, 0) + 1
        failed = []
        for name, c in report.checks.items():
            counts = self.checks.setdefault(name, CheckCounts())
            if c.holds:
                counts.holds += 1
            else:
                counts.fails += 1
                failed.append(name)
            counts.tight += c.tight
        if "thm-match" in report.checks and report.checks["thm-match"].tight:
            self.equality_tight += 1
        self.join_recognized += report.join_profile is not None
        conj = [name for name in failed if report.checks[name].kind == CONJECTURE]
        if conj:
            self.counterexamples.append(report.graph6)
            self.certificates.append(certificate(report, conj))
        return conj

    @property
    def exit_status(self) -> int:
        return 2 if self.counterexamples else 0

    def as_dict(self, include_time: bool = False) -> dict[str, Any]:
        out: dict[str, Any] = {
            "graphs_processed": self.graphs_processed,
            "per_n": {str(k): v for k, v in sorted(self.per_n.items())},
            "checks": {
                name: {"holds": c.holds, "tight": c.tight, "fails": c.fails}
                for name, c in self.checks.items()
            },
            "equality_tight": self.equality_tight,
            "join_recognized": self.join_recognized,
            "counterexamples": self.counterexamples,
            "certificates": self.certificates,
        }
        if include_time:
            out["wall_time"] = round(self.wall_time, 3)
        return out


def _theorem_problems(report: BoundReport) -> list[str]:
    problems = [f"{c.name}: {c.lhs} > {c.rhs}" for c in report.failures(THEOREM)]
    if "thm-match" in report.checks:
        tight = report.checks["thm-match"].tight
        if tight != (report.join_profile is not None):
            problems.append(
                f"thm-match tight={tight} but join recognizer "
                f"{'accepts' if report.join_profile else 'rejects'}"
            )
    problems += [
        f"{v.rule} at edge {v.edge}: {v.lhs} > {v.rhs}" for v in report.invariant_violations
    ]
    return problems


def builtin_graphs(lo: int, hi: int) -> Iterator[Graph]:
    for n in range(lo, hi + 1):
        yield from enumerate_stream(n)


def run_verify(
    graphs: Iterable[Graph],
    checks: tuple[str, ...] = CHECK_NAMES,
    jobs: int = 1,
    fail_fast: bool = False,
    on_report: Callable[[SolvedGraph], None] | None = None,
) -> SweepSummary:
    """Sweep ``graphs``; raise ``TheoremFailure`` on the first proved-bound failure.

    Conjecture failures are collected as certificates; with ``fail_fast`` the
    sweep stops at the first one.
    """
    summary = SweepSummary()
    start = time.perf_counter()
    for solved in solve_many(graphs, checks, jobs):
        report = solved.report
        problems = _theorem_problems(report)
        if problems:
            raise TheoremFailure(
                f"proved bound failed on {report.graph6}: {'; '.join(problems)}",
                certificate(report, [c.name for c in report.failures()]) | {"problems": problems},
            )
        conj = summary.record(report)
        if on_report is not None:
            on_report(solved)
        if conj and fail_fast:
            break
    summary.wall_time = time.perf_counter() - start
    return summary


# constructions

FAMILIES = ("complete", "biclique", "join", "cycle")


def run_construct(family: str, params: list[int]) -> dict[str, Any]:
    """Build a named family; join families also carry the certified set A."""
    a = None
    if family == "complete":
        if len(params) != 1:
            raise ValueError("complete takes one parameter n")
        g = complete(params[0])
    elif family == "cycle":
        if len(params) != 1:
            raise ValueError("cycle takes one parameter n")
        g = cycle(params[0])
    elif family == "biclique":
        if len(params) != 2:
            raise ValueError("biclique takes two parameters a b")
        g = complete_bipartite(*params)
    elif family == "join":
        if not params or min(params) < 1:
            raise ValueError("join takes one or more part sizes r_i >= 1")
        profile = JoinProfile(tuple(params))
        g = profile.graph()
        a = profile.independent_set()
        if not is_triangle_independent(g, a):
            raise TheoremFailure("constructed set is not triangle-independent", {"graph6": encode(g).decode()})
    else:
        raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    out: dict[str, Any] = {
        "family": family,
        "params": list(params),
        "graph6": encode(g).decode("ascii"),
        "n": g.n,
        "m": g.m,
    }
    if a is not None:
        out["independent_set"] = a.ids()
        out["independent_set_size"] = len(a)
    return out


def parse_records(lines: Iterable[bytes | str]) -> Iterator[tuple[int, Graph | Graph6Error]]:
    """Decode a line stream, yielding ``(line, graph)`` or ``(line, error)``."""
    for lineno, record in read_lines(lines):
        try:
            yield lineno, decode(record)
        except Graph6Error as exc:
            yield lineno, exc


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=False, separators=(",", ":"))

