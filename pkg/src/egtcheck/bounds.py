"""Integer-exact evaluation of the alpha_1 / tau / tau_B / b inequalities for one graph.

Every inequality is stored with denominators cleared, ``lhs <= rhs`` over
Python ints. Checks are split into proved ``theorem`` checks, whose failure
means a bug, and ``conjecture`` checks, whose failure is a counterexample.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Any

from .graph import (
    EdgeSet,
    Graph,
    complement,
    complete_bipartite,
    degree_in,
    is_triangle_independent,
    iter_bits,
    join,
)
from .graph6 import encode

THEOREM = "theorem"
CONJECTURE = "conjecture"


@dataclass(frozen=True)
class Check:
    name: str
    kind: str
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs

    @property
    def tight(self) -> bool:
        return self.lhs == self.rhs

    def as_dict(self) -> dict[str, Any]:
        return {"lhs": self.lhs, "rhs": self.rhs, "holds": self.holds, "tight": self.tight}


def check_egt(n: int, alpha1: int, tau: int) -> Check:
    """4(alpha_1 + tau) <= n^2."""
    return Check("egt", CONJECTURE, 4 * (alpha1 + tau), n * n)


def check_bip_conjecture(n: int, alpha1: int, tau_b: int) -> Check:
    """4(alpha_1 + tau_B) <= n^2."""
    return Check("bip", CONJECTURE, 4 * (alpha1 + tau_b), n * n)


def check_cor_5n2_16(n: int, alpha1: int, tau_b: int) -> Check:
    """16(alpha_1 + tau_B) <= 5 n^2."""
    return Check("cor516", THEOREM, 16 * (alpha1 + tau_b), 5 * n * n)


def check_lemma_nb4(n: int, alpha1: int, b_val: int) -> Check:
    """4 alpha_1 <= n b."""
    return Check("lemma-nb4", THEOREM, 4 * alpha1, n * b_val)


def check_lemma_taub(n: int, tau_b: int, b_val: int) -> Check:
    """4 tau_B <= n^2 - b^2."""
    return Check("lemma-taub", THEOREM, 4 * tau_b, n * n - b_val * b_val)


def check_thm_match(n: int, m: int, alpha1: int) -> Check:
    """2 alpha_1 <= n^2 - 2m."""
    return Check("thm-match", THEOREM, 2 * alpha1, n * n - 2 * m)


CHECK_NAMES = ("egt", "bip", "cor516", "lemma-nb4", "lemma-taub", "thm-match")
CONJECTURE_CHECKS = ("egt", "bip")


@dataclass(frozen=True)
class JoinProfile:
    parts: tuple[int, ...]

    def graph(self) -> Graph:
        return join([complete_bipartite(r, r) for r in self.parts])

    def independent_set(self) -> EdgeSet:
        """Union of the edge sets of the ``K_{r,r}`` factors, size sum r_i^2."""
        g = self.graph()
        edges = []
        offset = 0
        for r in self.parts:
            edges += [(offset + i, offset + r + j) for i in range(r) for j in range(r)]
            offset += 2 * r
        return g.edge_set(edges)


def _clique_components(g: Graph) -> list[int] | None:
    """Component sizes if every component of ``g`` is a clique, else ``None``."""
    sizes = []
    todo = (1 << g.n) - 1
    while todo:
        v = (todo & -todo).bit_length() - 1
        comp = g.adj[v] | 1 << v
        for w in iter_bits(comp):
            if g.adj[w] | 1 << w != comp:
                return None
        sizes.append(bin(comp).count("1"))
        todo &= ~comp
    return sizes


def recognize_join_of_balanced_bicliques(g: Graph) -> JoinProfile | None:
    """Parts ``[r_1, ..., r_t]`` (ascending) if ``g`` is a join of ``K_{r_i,r_i}``, else ``None``.

    The complement of such a join is a disjoint union of cliques in which
    every clique size occurs an even number of times.
    """
    sizes = _clique_components(complement(g))
    if sizes is None:
        return None
    parts = []
    for size, count in sorted(Counter(sizes).items()):
        if count % 2:
            return None
        parts += [size] * (count // 2)
    return JoinProfile(tuple(parts))


@dataclass(frozen=True)
class InvariantViolation:
    rule: str
    edge: tuple[int, int]
    lhs: int
    rhs: int


def certify_witness_invariants(g: Graph, a: EdgeSet, b_val: int) -> list[InvariantViolation]:
    """Per-edge degree checks for a triangle-independent set ``a``.

    ``edge-nbhd``: d_A(u) + d_A(v) <= b for every edge uv of G.
    ``vertex-max``: d_A(u) <= n - d_G(v) for every edge uv of A, both orientations.
    Returns the violations found (empty when everything holds).
    """
    if not is_triangle_independent(g, a):
        raise ValueError("witness invariants need a triangle-independent edge set")
    d_a = [degree_in(a, v) for v in range(g.n)]
    out = []
    for u, v in g.edges():
        if d_a[u] + d_a[v] > b_val:
            out.append(InvariantViolation("edge-nbhd", (u, v), d_a[u] + d_a[v], b_val))
    for u, v in a.pairs():
        for x, y in ((u, v), (v, u)):
            if d_a[x] > g.n - g.degree(y):
                out.append(InvariantViolation("vertex-max", (x, y), d_a[x], g.n - g.degree(y)))
    return out


@dataclass
class BoundReport:
    graph6: str
    n: int
    m: int
    alpha1: int
    tau: int
    tau_b: int
    b_val: int
    checks: dict[str, Check] = field(default_factory=dict)
    join_profile: JoinProfile | None = None
    invariant_violations: list[InvariantViolation] = field(default_factory=list)

    def failures(self, kind: str | None = None) -> list[Check]:
        return [c for c in self.checks.values() if not c.holds and (kind is None or c.kind == kind)]

    def as_dict(self) -> dict[str, Any]:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "alpha1": self.alpha1,
            "tau": self.tau,
            "tau_b": self.tau_b,
            "b": self.b_val,
            "checks": {name: c.as_dict() for name, c in self.checks.items()},
            "join_profile": list(self.join_profile.parts) if self.join_profile else None,
        }

    def csv_row(self) -> dict[str, Any]:
        row: dict[str, Any] = {
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "alpha1": self.alpha1,
            "tau": self.tau,
            "tau_b": self.tau_b,
            "b": self.b_val,
        }
        for name, c in self.checks.items():
            for key, value in c.as_dict().items():
                row[f"{name}_{key}"] = int(value) if isinstance(value, bool) else value
        row["join_profile"] = " ".join(map(str, self.join_profile.parts)) if self.join_profile else ""
        return row


def csv_columns(check_names: tuple[str, ...] = CHECK_NAMES) -> list[str]:
    cols = ["graph6", "n", "m", "alpha1", "tau", "tau_b", "b"]
    for name in check_names:
        cols += [f"{name}_lhs", f"{name}_rhs", f"{name}_holds", f"{name}_tight"]
    return cols + ["join_profile"]


def evaluate(
    g: Graph,
    alpha1: int,
    tau: int,
    tau_b: int,
    b_val: int,
    witness: EdgeSet | None = None,
    check_names: tuple[str, ...] = CHECK_NAMES,
) -> BoundReport:
    """Assemble the report for ``g`` from solver values (and optionally the alpha_1 witness)."""
    n, m = g.n, g.m
    every = {
        "egt": lambda: check_egt(n, alpha1, tau),
        "bip": lambda: check_bip_conjecture(n, alpha1, tau_b),
        "cor516": lambda: check_cor_5n2_16(n, alpha1, tau_b),
        "lemma-nb4": lambda: check_lemma_nb4(n, alpha1, b_val),
        "lemma-taub": lambda: check_lemma_taub(n, tau_b, b_val),
        "thm-match": lambda: check_thm_match(n, m, alpha1),
    }
    report = BoundReport(encode(g).decode("ascii"), n, m, alpha1, tau, tau_b, b_val)
    for name in check_names:
        report.checks[name] = every[name]()
    report.join_profile = recognize_join_of_balanced_bicliques(g)
    if witness is not None:
        report.invariant_violations = certify_witness_invariants(g, witness, b_val)
    return report
