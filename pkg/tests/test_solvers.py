from itertools import combinations, product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from egtcheck.graph import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    delete_edges,
    induced_subgraph,
    is_bipartite,
    is_triangle_edge_cover,
    is_triangle_independent,
    join,
    two_coloring,
)
from egtcheck.solvers import (
    NotBipartiteError,
    _trial_words,
    alpha1,
    b,
    derandomized_bipartization,
    outside_edge_count,
    randomized_bipartization,
    randomized_deletion_counts,
    tau,
    tau_b,
    trial_assignment,
)
from oracles import alpha1_tau_brute, b_brute, tau_b_brute


@st.composite
def graphs(draw, max_n=6):
    n = draw(st.integers(0, max_n))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return Graph.from_edge_mask(n, mask)


def test_alpha1_examples():
    assert alpha1(complete(6)).value == 3
    assert alpha1(complete_bipartite(3, 3)).value == 9
    assert alpha1(cycle(5)).value == 5
    g = join([complete_bipartite(1, 1), complete_bipartite(2, 2)])
    assert alpha1(g).value == 5 == alpha1_tau_brute(g)[0]
    assert alpha1(Graph.empty(4)).value == 0


def test_tau_examples():
    assert tau(complete(6)).value == 6
    assert tau(complete(4)).value == 2
    assert tau(cycle(5)).value == 0
    assert tau(complete(5)).value == 4 == alpha1_tau_brute(complete(5))[1]


def test_tau_b_examples():
    assert tau_b(cycle(5)).value == 1
    assert tau_b(complete(4)).value == 2
    assert tau_b(complete_bipartite(2, 3)).value == 0
    assert tau_b(Graph.empty(1)).value == 0


def test_b_examples():
    for n in range(2, 8):
        assert b(complete(n)).value == 2
    assert b(cycle(5)).value == 4
    assert b(complete_bipartite(3, 4)).value == 7
    assert b(Graph.empty(0)).value == 0


@settings(max_examples=120, deadline=None)
@given(graphs())
def test_values_match_brute_force(g):
    a_val, t_val = alpha1_tau_brute(g)
    assert alpha1(g).value == a_val
    assert tau(g).value == t_val
    assert tau_b(g).value == tau_b_brute(g)
    assert b(g).value == b_brute(g)


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=7))
def test_witnesses_are_feasible_and_sized(g):
    a = alpha1(g)
    assert is_triangle_independent(g, a.witness) and len(a.witness) == a.value
    t = tau(g)
    assert is_triangle_edge_cover(g, t.witness) and len(t.witness) == t.value
    tb = tau_b(g)
    assert is_bipartite(delete_edges(g, tb.witness)) and len(tb.witness) == tb.value
    bv = b(g)
    assert is_bipartite(induced_subgraph(g, bv.witness)) and len(bv.witness) == bv.value


def _lex_least(g, size, ok):
    """Least ascending id tuple among feasible edge sets of the given size."""
    ids = [k for k in range(g.n * (g.n - 1) // 2) if g.edge_mask >> k & 1]
    for combo in combinations(ids, size):
        if ok(g.edge_set(sum(1 << k for k in combo))):
            return list(combo)
    return None


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=5))
def test_edge_witnesses_are_lexicographically_least(g):
    a = alpha1(g)
    assert a.witness.ids() == _lex_least(g, a.value, lambda s: is_triangle_independent(g, s))
    t = tau(g)
    assert t.witness.ids() == _lex_least(g, t.value, lambda s: is_triangle_edge_cover(g, s))
    tb = tau_b(g)
    assert tb.witness.ids() == _lex_least(g, tb.value, lambda s: is_bipartite(delete_edges(g, s)))


def test_b_witness_is_lexicographically_least():
    g = cycle(5)
    assert b(g).witness == (0, 1, 2, 3)
    g = complete(5)
    assert b(g).witness == (0, 1)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_adding_an_edge_never_increases_alpha1_plus_slack(g):
    # alpha1(G + e) <= n^2/2 - m(G + e); check alpha1 + 2m monotone under edge addition
    missing = [(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)]
    if not missing:
        return
    u, v = missing[0]
    h = Graph.from_edges(g.n, g.edges() + [(u, v)])
    assert 2 * alpha1(h).value <= g.n ** 2 - 2 * h.m
    assert tau(g).value <= tau(h).value
    assert tau_b(g).value <= tau_b(h).value


def test_deterministic():
    g = cycle(7)
    assert alpha1(g) == alpha1(g)
    assert tau(complete(6)) == tau(complete(6))


# bipartization


def test_randomized_on_bipartite_graph():
    g = complete_bipartite(3, 3)
    mean, best = randomized_bipartization(g, tuple(range(6)), trials=50, seed=1)
    assert mean == 0.0 and len(best) == 0


def _placement_oracle(g, inside):
    """Deletion count of every placement of the outside vertices."""
    colour = two_coloring(induced_subgraph(g, inside))
    side = {v: colour[i] for i, v in enumerate(sorted(inside))}
    outside = [v for v in range(g.n) if v not in side]
    counts = []
    for choice in product((0, 1), repeat=len(outside)):
        s = {**side, **dict(zip(outside, choice))}
        counts.append(sum(s[u] == s[v] for u, v in g.edges()))
    return counts


def test_k4_placement_enumeration():
    g = complete(4)
    counts = _placement_oracle(g, (0, 1))
    assert len(counts) == 4
    assert min(counts) >= 2
    assert sum(counts) / 4 == 2.5 == outside_edge_count(g, (0, 1)) / 2


def test_randomized_k4_is_feasible_and_near_expectation():
    g = complete(4)
    mean, best = randomized_bipartization(g, (0, 1), trials=4000, seed=3)
    assert is_bipartite(delete_edges(g, best))
    assert len(best) >= 2
    counts = randomized_deletion_counts(g, (0, 1), 4000, seed=3)
    se = counts.std(ddof=1) / np.sqrt(len(counts))
    assert abs(mean - 2.5) <= 4 * se


def test_randomized_is_reproducible_and_order_independent():
    g = cycle(7)
    assert randomized_bipartization(g, (0, 1, 2), 300, 9) == randomized_bipartization(g, (0, 1, 2), 300, 9)
    words = _trial_words(11, 0, 40)
    for t in range(40):
        assert int(_trial_words(11, t, 1)[0]) == int(words[t])
        assert trial_assignment(11, t, 4) == [int(words[t]) >> i & 1 for i in range(4)]


def test_not_bipartite_set_rejected():
    with pytest.raises(NotBipartiteError):
        randomized_bipartization(complete(4), (0, 1, 2), 10, 0)
    with pytest.raises(NotBipartiteError):
        derandomized_bipartization(complete(4), (0, 1, 2))


def test_derandomized_examples():
    assert len(derandomized_bipartization(complete(4), (0, 1))) == 2
    g = complete_bipartite(2, 3)
    assert len(derandomized_bipartization(g, tuple(range(5)))) == 0


def _maximal_bipartite_sets(g):
    sets = []
    for mask in range(1, 1 << g.n):
        verts = [v for v in range(g.n) if mask >> v & 1]
        if not is_bipartite(induced_subgraph(g, verts)):
            continue
        if all(
            not is_bipartite(induced_subgraph(g, verts + [w])) for w in range(g.n) if not mask >> w & 1
        ):
            sets.append(tuple(verts))
    return sets


def test_derandomized_bound_on_every_maximal_bipartite_set(levels):
    for n in range(1, 8):
        for g in levels[n]:
            for inside in _maximal_bipartite_sets(g):
                x = derandomized_bipartization(g, inside)
                assert is_bipartite(delete_edges(g, x))
                assert 2 * len(x) <= outside_edge_count(g, inside), (g, inside)
