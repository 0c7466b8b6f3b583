"""Exact solvers for alpha_1, tau, tau_B and b, plus the bipartization procedures.

Witness ties are broken lexicographically: among optimal edge sets the one
whose ascending id list is least is returned (equivalently, the largest
characteristic vector read from id 0 upward). Vertex witnesses follow the
same rule on ascending vertex lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Union

import numpy as np

from .graph import (
    EdgeSet,
    Graph,
    _id_table,
    iter_bits,
    popcount,
    triangle_masks,
    two_coloring_mask,
)

Witness = Union[EdgeSet, tuple[int, ...]]


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: Witness
    nodes_explored: int
    optimal: bool = True


class NotBipartiteError(ValueError):
    """The supplied vertex set does not induce a bipartite subgraph."""


# alpha_1


def _conflicts(g: Graph) -> dict[int, int]:
    """For each edge id, the ids of edges sharing a triangle with it."""
    table = _id_table(g.n)
    conf: dict[int, int] = {}
    for u, v in g.edges():
        mask = 0
        for w in iter_bits(g.adj[u] & g.adj[v]):
            mask |= 1 << table[u][w] | 1 << table[v][w]
        conf[table[u][v]] = mask
    return conf


def alpha1(g: Graph) -> SolveResult:
    """Maximum triangle-independent edge set.

    Depth-first include/exclude over edges in id order, include first.
    Taking an edge removes every edge that shares a triangle with it from
    the available pool; a branch is cut once chosen + available cannot beat
    the incumbent.
    """
    conf = _conflicts(g)
    best_size = -1
    best_bits = 0
    nodes = 0

    def search(chosen: int, size: int, avail: int) -> None:
        nonlocal best_size, best_bits, nodes
        nodes += 1
        if size + popcount(avail) <= best_size:
            return
        if not avail:
            best_size, best_bits = size, chosen
            return
        low = avail & -avail
        e = low.bit_length() - 1
        search(chosen | low, size + 1, avail & ~low & ~conf[e])
        search(chosen, size, avail & ~low)

    search(0, 0, g.edge_mask)
    return SolveResult(best_size, EdgeSet(g.n, g.m, best_bits), nodes)


# tau


def _packing_bound(tris: list[int]) -> int:
    """Greedy count of edge-disjoint triangles, a lower bound on the cover size."""
    used = 0
    count = 0
    for t in tris:
        if not t & used:
            used |= t
            count += 1
    return count


class _CoverSearch:
    """Triangle-branching search for covers avoiding a forbidden edge set."""

    def __init__(self, tris: list[int]):
        self.tris = tris
        self.nodes = 0

    def minimum(self, forced: int, forbidden: int, budget: int) -> int | None:
        """Smallest cover containing ``forced`` and avoiding ``forbidden`` of size <= budget.

        Returns the cover mask or ``None``.
        """
        best: list[int | None] = [None]
        limit = [budget + 1]

        def search(x: int, size: int, banned: int) -> None:
            self.nodes += 1
            open_tris = [t for t in self.tris if not t & x]
            if not open_tris:
                best[0] = x
                limit[0] = size
                return
            if size + _packing_bound(open_tris) >= limit[0]:
                return
            t = open_tris[0]
            # disjoint branches: take the i-th free edge, ban the earlier ones
            for e in iter_bits(t & ~banned):
                bit = 1 << e
                search(x | bit, size + 1, banned)
                banned |= bit
                if size + 1 >= limit[0]:
                    return

        if forced & forbidden:
            return None
        search(forced, popcount(forced), forbidden)
        return best[0]


def tau(g: Graph) -> SolveResult:
    """Minimum triangle edge cover.

    The value comes from a depth-first search that branches on the first
    uncovered triangle (one child per deletable edge, earlier edges banned in
    later children) with an edge-disjoint-triangle lower bound. The witness is
    then fixed greedily edge by edge in id order, keeping an edge whenever an
    optimal cover still exists with it.
    """
    tris = triangle_masks(g)
    search = _CoverSearch(tris)
    if not tris:
        return SolveResult(0, EdgeSet(g.n, g.m, 0), 1)
    upper = g.m - _max_cut(g)[0]  # bipartite remainder is triangle-free
    cover = search.minimum(0, 0, upper)
    assert cover is not None
    value = popcount(cover)

    candidates = 0
    for t in tris:
        candidates |= t
    forced = forbidden = 0
    for e in iter_bits(candidates):
        if popcount(forced) == value:
            break
        bit = 1 << e
        if search.minimum(forced | bit, forbidden, value) is not None:
            forced |= bit
        else:
            forbidden |= bit
    assert search.minimum(forced, 0, value) == forced
    return SolveResult(value, EdgeSet(g.n, g.m, forced), search.nodes)


# tau_B via max cut


def _max_cut(g: Graph) -> tuple[int, list[int]]:
    """Maximum cut size and every side mask (vertex n-1 on side 0) attaining it."""
    n = g.n
    if n <= 1:
        return 0, [0]
    adj = g.adj
    full = (1 << n) - 1
    best = -1
    sides: list[int] = []
    for s in range(1 << (n - 1)):
        comp = full & ~s
        cut = 0
        for v in iter_bits(s):
            cut += popcount(adj[v] & comp)
        if cut > best:
            best, sides = cut, [s]
        elif cut == best:
            sides.append(s)
    return best, sides


def _inside_edges(g: Graph, side: int) -> int:
    """Edge-id mask of edges with both ends on the same side."""
    table = _id_table(g.n)
    mask = 0
    for u, v in g.edges():
        if (side >> u & 1) == (side >> v & 1):
            mask |= 1 << table[u][v]
    return mask


def _lex_key(bits: int) -> tuple[int, ...]:
    return tuple(iter_bits(bits))


def tau_b(g: Graph) -> SolveResult:
    """Minimum number of edges whose deletion leaves ``g`` bipartite, as m - maxcut."""
    cut, sides = _max_cut(g)
    witness = min((_inside_edges(g, s) for s in sides), key=_lex_key)
    return SolveResult(g.m - cut, EdgeSet(g.n, g.m, witness), max(1, 1 << max(g.n - 1, 0)))


# b


def b(g: Graph) -> SolveResult:
    """Largest vertex set inducing a bipartite subgraph.

    Subsets are scanned by decreasing size, lexicographically within a size,
    so the first hit is the lexicographically least maximum witness.
    """
    nodes = 0
    for size in range(g.n, 0, -1):
        for subset in combinations(range(g.n), size):
            nodes += 1
            mask = sum(1 << v for v in subset)
            if two_coloring_mask(g.adj, mask) is not None:
                return SolveResult(size, subset, nodes)
    return SolveResult(0, (), max(nodes, 1))


# bipartization from a bipartite vertex set


def _side_colouring(g: Graph, vertices: tuple[int, ...] | list[int]) -> list[int]:
    mask = 0
    for v in vertices:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        mask |= 1 << v
    colour = two_coloring_mask(g.adj, mask)
    if colour is None:
        raise NotBipartiteError(f"G[{sorted(vertices)}] is not bipartite")
    return colour


def outside_edge_count(g: Graph, vertices: tuple[int, ...] | list[int]) -> int:
    """``|E(G) \\ E(G[B])|``: edges with at least one end outside ``B``."""
    inside = set(vertices)
    return sum(1 for u, v in g.edges() if not (u in inside and v in inside))


def _trial_words(seed: int, first: int, count: int) -> np.ndarray:
    """Raw 64-bit words ``first .. first+count-1`` of the Philox stream keyed by ``seed``.

    Word ``t`` drives trial ``t``; any slice can be regenerated on its own.
    """
    bg = np.random.Philox(key=seed)
    bg.advance(first // 4)
    words = bg.random_raw(first % 4 + count)
    return np.asarray(words, dtype=np.uint64)[first % 4:]


def trial_assignment(seed: int, trial: int, k: int) -> list[int]:
    """Sides (0/1) of the ``k`` outside vertices in trial ``trial``."""
    word = int(_trial_words(seed, trial, 1)[0])
    return [word >> i & 1 for i in range(k)]


def _trial_sides(
    g: Graph, vertices: tuple[int, ...] | list[int], trials: int, seed: int
) -> np.ndarray:
    """``(trials, n)`` array of sides; ``B`` follows its 2-colouring, bit ``i`` of word ``t`` places outside vertex ``i``."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    colour = _side_colouring(g, vertices)
    inside = set(vertices)
    outside = [v for v in range(g.n) if v not in inside]
    if len(outside) > 64:
        raise ValueError("at most 64 outside vertices per trial word")
    words = _trial_words(seed, 0, trials)
    sides = np.empty((trials, g.n), dtype=np.uint8)
    for v in inside:
        sides[:, v] = colour[v]
    for i, v in enumerate(outside):
        sides[:, v] = ((words >> np.uint64(i)) & np.uint64(1)).astype(np.uint8)
    return sides


def _deletions(g: Graph, sides: np.ndarray) -> np.ndarray:
    deleted = np.zeros(len(sides), dtype=np.int64)
    for u, v in g.edges():
        deleted += sides[:, u] == sides[:, v]
    return deleted


def randomized_deletion_counts(
    g: Graph, vertices: tuple[int, ...] | list[int], trials: int, seed: int
) -> np.ndarray:
    """Per-trial deletion counts of ``randomized_bipartization`` (same trials)."""
    return _deletions(g, _trial_sides(g, vertices, trials, seed))


def randomized_bipartization(
    g: Graph, vertices: tuple[int, ...] | list[int], trials: int, seed: int
) -> tuple[float, EdgeSet]:
    """Place outside vertices uniformly on the sides of ``G[B]``'s 2-colouring.

    Each trial deletes every edge inside a side. Returns the mean deletion
    count over the trials and the smallest deletion set seen (earliest trial
    on ties). Trial ``t`` depends only on ``(seed, t)``.
    """
    sides = _trial_sides(g, vertices, trials, seed)
    deleted = _deletions(g, sides)
    t_best = int(np.argmin(deleted))
    side_mask = sum(1 << v for v in range(g.n) if sides[t_best, v])
    return float(deleted.mean()), EdgeSet(g.n, g.m, _inside_edges(g, side_mask))


def derandomized_bipartization(g: Graph, vertices: tuple[int, ...] | list[int]) -> EdgeSet:
    """Conditional-expectation placement of the outside vertices.

    Outside vertices are placed in ascending order, each on the side holding
    fewer of its already-placed neighbours (side 0 on ties). Deletes at most
    half of ``|E(G) \\ E(G[B])|`` edges.
    """
    colour = _side_colouring(g, vertices)
    inside = set(vertices)
    side_mask = [0, 0]
    for v in inside:
        side_mask[colour[v]] |= 1 << v
    for v in range(g.n):
        if v in inside:
            continue
        same0 = popcount(g.adj[v] & side_mask[0])
        same1 = popcount(g.adj[v] & side_mask[1])
        side_mask[0 if same0 <= same1 else 1] |= 1 << v
    return EdgeSet(g.n, g.m, _inside_edges(g, side_mask[1]))
