"""Bit-row graphs, edge sets over lexicographic edge ids, and triangle machinery.

A graph on ``n <= 32`` vertices stores one integer per vertex; bit ``v`` of
``adj[u]`` is set iff ``uv`` is an edge. Edge ids enumerate the pairs
``(u, v)`` with ``u < v`` in lexicographic order, so on ``n`` vertices the
ids are ``0 .. n(n-1)/2 - 1`` whether or not the edge is present. An
``EdgeSet`` is a bit-vector over those ids.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 32


class CapacityError(ValueError):
    """Raised when a construction would exceed ``MAX_VERTICES``."""


def _check_capacity(n: int) -> None:
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    if n > MAX_VERTICES:
        raise CapacityError(f"{n} vertices exceeds capacity {MAX_VERTICES}")


@lru_cache(maxsize=None)
def edge_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """All vertex pairs ``(u, v)``, ``u < v``, indexed by edge id."""
    return tuple(combinations(range(n), 2))


@lru_cache(maxsize=None)
def _id_table(n: int) -> tuple[tuple[int, ...], ...]:
    table = [[-1] * n for _ in range(n)]
    for k, (u, v) in enumerate(edge_pairs(n)):
        table[u][v] = table[v][u] = k
    return tuple(tuple(row) for row in table)


def edge_id(n: int, u: int, v: int) -> int:
    """Id of the pair ``{u, v}`` on ``n`` vertices; symmetric in ``u, v``."""
    if u == v or not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"no edge id for pair ({u}, {v}) on {n} vertices")
    return _id_table(n)[u][v]


def popcount(x: int) -> int:
    return bin(x).count("1")


def iter_bits(x: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph as a tuple of adjacency bit-rows.

    Construction validates symmetry and the absence of loops; instances are
    immutable and hashable.
    """

    n: int
    adj: tuple[int, ...]
    m: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        _check_capacity(self.n)
        adj = tuple(self.adj)
        if len(adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(adj)}")
        full = (1 << self.n) - 1
        for u, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"row {u} references a vertex >= {self.n}")
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")
            for v in iter_bits(row):
                if not adj[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "m", sum(popcount(r) for r in adj) // 2)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build from a list of pairs. Repeated pairs and loops are rejected."""
        _check_capacity(n)
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            if adj[u] >> v & 1:
                raise ValueError(f"repeated edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> Graph:
        """Graph whose edges are the set bits of an edge-id mask."""
        _check_capacity(n)
        adj = [0] * n
        pairs = edge_pairs(n)
        for k in iter_bits(mask):
            u, v = pairs[k]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs, ``u < v``, in edge-id order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_mask(self) -> int:
        """Bit-vector over edge ids of the edges present."""
        table = _id_table(self.n)
        mask = 0
        for u, v in self.edges():
            mask |= 1 << table[u][v]
        return mask

    def edge_set(self, edges: Iterable[tuple[int, int]] | int = ()) -> EdgeSet:
        """An ``EdgeSet`` hosted by this graph, from pairs or an id mask."""
        if isinstance(edges, int):
            bits = edges
        else:
            bits = 0
            for u, v in edges:
                bits |= 1 << edge_id(self.n, u, v)
        if bits & ~self.edge_mask:
            raise ValueError("edge set contains pairs that are not edges of the host graph")
        return EdgeSet(self.n, self.m, bits)

    def all_edges(self) -> EdgeSet:
        return EdgeSet(self.n, self.m, self.edge_mask)

    def relabel(self, order: Sequence[int]) -> Graph:
        """Graph whose vertex ``i`` is vertex ``order[i]`` of this graph."""
        if sorted(order) != list(range(self.n)):
            raise ValueError("order must be a permutation of the vertices")
        pos = {v: i for i, v in enumerate(order)}
        adj = []
        for v in order:
            row = 0
            for w in iter_bits(self.adj[v]):
                row |= 1 << pos[w]
            adj.append(row)
        return Graph(self.n, tuple(adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class EdgeSet:
    """Subset of a host graph's edges, as a bit-vector over edge ids."""

    n: int
    host_m: int
    bits: int

    def __len__(self) -> int:
        return popcount(self.bits)

    def __contains__(self, pair: object) -> bool:
        u, v = pair  # type: ignore[misc]
        return bool(self.bits >> edge_id(self.n, u, v) & 1)

    def ids(self) -> list[int]:
        return list(iter_bits(self.bits))

    def pairs(self) -> list[tuple[int, int]]:
        table = edge_pairs(self.n)
        return [table[k] for k in iter_bits(self.bits)]

    def rows(self) -> tuple[int, ...]:
        """Adjacency rows of the spanning subgraph with this edge set."""
        return Graph.from_edge_mask(self.n, self.bits).adj

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows()[v]))


@dataclass(frozen=True, order=True)
class Triangle:
    a: int
    b: int
    c: int

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return ((self.a, self.b), (self.a, self.c), (self.b, self.c))

    def edge_mask(self, n: int) -> int:
        return sum(1 << edge_id(n, u, v) for u, v in self.pairs())


def triangles(g: Graph) -> list[Triangle]:
    """All triangles ``a < b < c``, sorted ascending.

    For each edge ``ab`` with ``a < b`` the third vertices are the common
    neighbours above ``b``, read off ``adj[a] & adj[b]``.
    """
    out = []
    adj = g.adj
    for a in range(g.n):
        for b in iter_bits(adj[a] >> (a + 1) << (a + 1)):
            for c in iter_bits((adj[a] & adj[b]) >> (b + 1) << (b + 1)):
                out.append(Triangle(a, b, c))
    return out


def triangle_masks(g: Graph) -> list[int]:
    """Edge-id masks of the triangles of ``g``, in triangle order."""
    table = _id_table(g.n)
    return [
        (1 << table[t.a][t.b]) | (1 << table[t.a][t.c]) | (1 << table[t.b][t.c])
        for t in triangles(g)
    ]


def degree_in(s: EdgeSet, v: int) -> int:
    """Number of edges of ``s`` incident to ``v``."""
    if not 0 <= v < s.n:
        raise ValueError(f"vertex {v} out of range")
    table = _id_table(s.n)[v]
    return sum(1 for w in range(s.n) if w != v and s.bits >> table[w] & 1)


def _check_hosted(g: Graph, s: EdgeSet) -> None:
    if s.n != g.n or s.bits & ~g.edge_mask:
        raise ValueError("edge set is not hosted by this graph")


def is_triangle_independent(g: Graph, a: EdgeSet) -> bool:
    """True iff every triangle of ``g`` holds at most one edge of ``a``."""
    _check_hosted(g, a)
    for t in triangle_masks(g):
        hit = t & a.bits
        if hit & (hit - 1):
            return False
    return True


def is_triangle_edge_cover(g: Graph, x: EdgeSet) -> bool:
    """True iff deleting ``x`` leaves ``g`` triangle-free."""
    _check_hosted(g, x)
    return all(t & x.bits for t in triangle_masks(g))


def delete_edges(g: Graph, x: EdgeSet) -> Graph:
    _check_hosted(g, x)
    return Graph.from_edge_mask(g.n, g.edge_mask & ~x.bits)


def two_coloring_mask(adj: Sequence[int], vertices: int) -> list[int] | None:
    """2-colour the subgraph induced by the vertex mask, or ``None`` if odd cycle.

    Returns a colour per vertex index (``-1`` outside the mask). Breadth-first
    over every component, the smallest vertex of each component gets colour 0.
    """
    colour = [-1] * len(adj)
    todo = vertices
    while todo:
        root = (todo & -todo).bit_length() - 1
        colour[root] = 0
        side = [1 << root, 0]
        frontier = 1 << root
        seen = frontier
        c = 0
        while frontier:
            c ^= 1
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            nxt &= vertices
            if nxt & side[c ^ 1]:
                return None
            nxt &= ~seen
            side[c] |= nxt
            for v in iter_bits(nxt):
                colour[v] = c
            seen |= nxt
            frontier = nxt
        todo &= ~seen
    return colour


def two_coloring(g: Graph) -> list[int] | None:
    """A proper 2-colouring of ``g`` as a list of 0/1, or ``None``."""
    return two_coloring_mask(g.adj, (1 << g.n) - 1)


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """``g[S]`` relabelled by ascending order of ``S``."""
    order = sorted(set(vertices))
    if order and not (0 <= order[0] and order[-1] < g.n):
        raise ValueError("vertex set is not contained in the graph")
    pos = {v: i for i, v in enumerate(order)}
    adj = []
    for v in order:
        row = 0
        for w in order:
            if g.adj[v] >> w & 1:
                row |= 1 << pos[w]
        adj.append(row)
    return Graph(len(order), tuple(adj))


# constructors


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << u) for u, row in enumerate(g.adj)))


def complete(n: int) -> Graph:
    _check_capacity(n)
    return complement(Graph.empty(n))


def complete_bipartite(a: int, b: int) -> Graph:
    """``K_{a,b}`` with sides ``0..a-1`` and ``a..a+b-1``."""
    _check_capacity(a + b)
    left = (1 << a) - 1
    right = ((1 << b) - 1) << a
    return Graph(a + b, (right,) * a + (left,) * b)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    total = sum(g.n for g in graphs)
    _check_capacity(total)
    adj: list[int] = []
    offset = 0
    for g in graphs:
        adj.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(total, tuple(adj))


def join(graphs: Sequence[Graph]) -> Graph:
    """Disjoint union plus every edge between different parts."""
    union = disjoint_union(graphs)
    full = (1 << union.n) - 1
    adj = list(union.adj)
    offset = 0
    for g in graphs:
        own = ((1 << g.n) - 1) << offset
        for v in range(offset, offset + g.n):
            adj[v] |= full & ~own
        offset += g.n
    return Graph(union.n, tuple(adj))
