"""Isomorph-free generation of all simple graphs on ``n`` vertices.

Level ``k + 1`` is built from level ``k`` by attaching a new vertex to every
subset of the existing vertices, canonicalising, and deduplicating on the
canonical string. Only attachments in which the new vertex has maximum
degree in the child are tried: every graph arises that way from the graph
left after deleting one of its maximum-degree vertices, so nothing is lost.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

from .canon import canonical_graph
from .graph import Graph, popcount
from .graph6 import encode

MAX_ENUM_N = 9


class BudgetExceeded(ValueError):
    """Requested level is beyond the supported enumeration budget."""


@dataclass(frozen=True)
class EnumerationLevel:
    n: int
    graphs: tuple[Graph, ...]

    def __len__(self) -> int:
        return len(self.graphs)

    def records(self) -> list[bytes]:
        return [encode(g) for g in self.graphs]


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"enumeration needs n >= 1, got {n}")
    if n > MAX_ENUM_N:
        raise BudgetExceeded(f"enumeration is limited to n <= {MAX_ENUM_N}, got {n}")


def augment(parent: Graph) -> Iterator[Graph]:
    """Children of ``parent`` with a new last vertex of maximum degree."""
    k = parent.n
    degs = [popcount(r) for r in parent.adj]
    for s in range(1 << k):
        d = popcount(s)
        if any(degs[v] + (s >> v & 1) > d for v in range(k)):
            continue
        adj = tuple(r | ((s >> v & 1) << k) for v, r in enumerate(parent.adj)) + (s,)
        yield Graph(k + 1, adj)


def next_level(graphs: tuple[Graph, ...]) -> tuple[Graph, ...]:
    seen: dict[bytes, Graph] = {}
    for parent in graphs:
        for child in augment(parent):
            h = canonical_graph(child)
            seen.setdefault(encode(h), h)
    return tuple(seen[key] for key in sorted(seen))


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph.empty(1),)
    return next_level(_level(n - 1))


def enumerate_all(n: int) -> EnumerationLevel:
    """One canonical representative per isomorphism class, sorted by canonical string."""
    _check_n(n)
    return EnumerationLevel(n, _level(n))


def enumerate_stream(n: int, sink: Callable[[Graph], None] | None = None) -> Iterator[Graph]:
    """Iterate the level-``n`` graphs in canonical-string order, also feeding ``sink``.

    ``n`` is validated on the call, not on first iteration.
    """
    _check_n(n)
    return _stream(n, sink)


def _stream(n: int, sink: Callable[[Graph], None] | None) -> Iterator[Graph]:
    for g in _level(n):
        if sink is not None:
            sink(g)
        yield g
