"""Canonical form by minimising the upper-triangle bit string over relabellings.

The canonical string of ``G`` is the lexicographically least column-major
upper-triangle bit string ``x(0,1), x(0,2), x(1,2), ...`` among all ``n!``
relabellings, returned as the graph6 record of that relabelling.

Relabellings are built one position at a time. Placing vertex ``w`` at
position ``k`` appends the ``k`` bits ``x(p0, w) .. x(p_{k-1}, w)``, so a
partial order whose prefix is already larger than the best prefix can be
dropped. Two partial orders with the same placed set and the same pending
bit-codes for every unplaced vertex have identical futures, so only one of
them is kept. The result is exactly the minimum over all permutations.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import Graph, iter_bits
from .graph6 import encode

MAX_CANON_N = 10


@lru_cache(maxsize=None)
def _spread(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Tables moving bit ``u`` of a row or vertex mask to the low bit of field ``u``."""
    width = n + 1
    rows = []
    for row in range(1 << n):
        rows.append(sum(1 << (width * u) for u in iter_bits(row)))
    fields = tuple(r * ((1 << width) - 1) for r in rows)
    return tuple(rows), fields


@lru_cache(maxsize=None)
def _bit_lists(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(iter_bits(x)) for x in range(1 << n))


def canonical_order(g: Graph) -> tuple[int, ...]:
    """A vertex order whose relabelling attains the canonical string."""
    n = g.n
    if n > MAX_CANON_N:
        raise ValueError(f"canonical form is limited to {MAX_CANON_N} vertices, got {n}")
    if n <= 1:
        return tuple(range(n))
    adj = g.adj
    full = (1 << n) - 1
    width = n + 1
    fmask = (1 << width) - 1
    spread, field_mask = _spread(n)
    shifts = [width * u for u in range(n)]

    # pending codes of all vertices packed into one int, ``width`` bits per
    # vertex; fields of placed vertices are zero
    states: dict[tuple[int, int], tuple[int, ...]] = {}
    for w in range(n):
        rest = full & ~(1 << w)
        states.setdefault((1 << w, spread[adj[w]] & field_mask[rest]), (w,))

    bit_lists = _bit_lists(n)
    for _ in range(1, n):
        # per state, the unplaced vertices whose appended bits are smallest
        best = fmask + 1
        fronts = []
        for (placed, codes), order in states.items():
            free = full & ~placed
            low = fmask + 1
            ws: list[int] = []
            for u in bit_lists[free]:
                c = codes >> shifts[u] & fmask
                if c < low:
                    low = c
                    ws = [u]
                elif c == low:
                    ws.append(u)
            if low < best:
                best = low
                fronts = [(placed, codes, order, free, ws)]
            elif low == best:
                fronts.append((placed, codes, order, free, ws))
        nxt: dict[tuple[int, int], tuple[int, ...]] = {}
        for placed, codes, order, free, ws in fronts:
            shifted = codes << 1
            for w in ws:
                rest = free & ~(1 << w)
                key = (placed | 1 << w, (shifted | spread[adj[w]]) & field_mask[rest])
                if key not in nxt:
                    nxt[key] = order + (w,)
        states = nxt
    return next(iter(states.values()))


def canonical_graph(g: Graph) -> Graph:
    """The canonical relabelling of ``g``."""
    return g.relabel(canonical_order(g))


def canonical_form(g: Graph) -> bytes:
    """graph6 record of the canonical relabelling; equal iff isomorphic."""
    return encode(canonical_graph(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)
