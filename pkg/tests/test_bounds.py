import pytest

from egtcheck.bounds import (
    CONJECTURE,
    THEOREM,
    JoinProfile,
    certify_witness_invariants,
    check_bip_conjecture,
    check_cor_5n2_16,
    check_egt,
    check_lemma_nb4,
    check_lemma_taub,
    check_thm_match,
    evaluate,
    recognize_join_of_balanced_bicliques,
)
from egtcheck.canon import canonical_form
from egtcheck.graph import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    is_triangle_independent,
    join,
)
from oracles import integer_partitions


def _lr(check):
    return check.lhs, check.rhs, check.holds, check.tight


def test_egt_examples():
    assert _lr(check_egt(6, 3, 6)) == (36, 36, True, True)
    assert _lr(check_egt(6, 9, 0)) == (36, 36, True, True)
    assert _lr(check_egt(5, 2, 4)) == (24, 25, True, False)
    assert check_egt(5, 2, 4).kind == CONJECTURE


def test_bip_conjecture_examples():
    assert check_bip_conjecture(6, 3, 6).tight
    assert _lr(check_bip_conjecture(5, 5, 1)) == (24, 25, True, False)
    assert _lr(check_bip_conjecture(1, 0, 0)) == (0, 1, True, False)


def test_cor_examples():
    assert _lr(check_cor_5n2_16(6, 3, 6)) == (144, 180, True, False)
    assert _lr(check_cor_5n2_16(6, 9, 0)) == (144, 180, True, False)
    assert check_cor_5n2_16(7, 0, 0).rhs == 5 * 49
    assert check_cor_5n2_16(7, 0, 0).kind == THEOREM


def test_lemma_examples():
    assert _lr(check_lemma_nb4(6, 3, 2)) == (12, 12, True, True)
    assert _lr(check_lemma_nb4(5, 5, 4)) == (20, 20, True, True)
    assert _lr(check_lemma_nb4(6, 9, 6)) == (36, 36, True, True)
    assert _lr(check_lemma_taub(4, 2, 2)) == (8, 12, True, False)
    assert _lr(check_lemma_taub(5, 1, 4)) == (4, 9, True, False)
    assert _lr(check_lemma_taub(6, 0, 6)) == (0, 0, True, True)


def test_thm_match_examples():
    assert _lr(check_thm_match(4, 6, 2)) == (4, 4, True, True)
    assert _lr(check_thm_match(5, 5, 5)) == (10, 15, True, False)
    assert _lr(check_thm_match(6, 13, 5)) == (10, 10, True, True)


def test_failing_check_flags():
    c = check_egt(4, 3, 2)
    assert not c.holds and not c.tight


def test_recognizer_examples():
    assert recognize_join_of_balanced_bicliques(complete(4)).parts == (1, 1)
    assert recognize_join_of_balanced_bicliques(cycle(4)).parts == (2,)
    assert recognize_join_of_balanced_bicliques(cycle(5)) is None
    assert recognize_join_of_balanced_bicliques(complete(3)) is None
    g = join([complete_bipartite(2, 2), complete_bipartite(1, 1), complete_bipartite(2, 2)])
    assert recognize_join_of_balanced_bicliques(g.relabel([5, 0, 3, 1, 4, 2, 9, 6, 8, 7])).parts == (1, 2, 2)


def test_join_profile_independent_set():
    for parts in [(1,), (1, 1), (3,), (1, 2), (2, 2, 1)]:
        profile = JoinProfile(parts)
        g = profile.graph()
        a = profile.independent_set()
        n = 2 * sum(parts)
        assert g.n == n
        assert is_triangle_independent(g, a)
        assert len(a) == sum(r * r for r in parts)
        assert 2 * len(a) == n * n - 2 * g.m


def test_recognizer_matches_join_oracle_up_to_7(levels):
    """Accepted exactly when some join of K_{r,r} is isomorphic; profile reconstructs G."""
    joins = {}
    for k in range(1, 4):
        for parts in integer_partitions(k):
            joins[canonical_form(JoinProfile(parts).graph())] = parts
    for n in range(1, 8):
        for g in levels[n]:
            profile = recognize_join_of_balanced_bicliques(g)
            key = canonical_form(g)
            if profile is None:
                assert key not in joins
            else:
                assert joins[key] == profile.parts
                assert canonical_form(profile.graph()) == key


def test_witness_invariant_examples():
    k6 = complete(6)
    matching = k6.edge_set([(0, 1), (2, 3), (4, 5)])
    assert certify_witness_invariants(k6, matching, 2) == []
    c5 = cycle(5)
    assert certify_witness_invariants(c5, c5.all_edges(), 4) == []
    k2 = complete(2)
    assert certify_witness_invariants(k2, k2.all_edges(), 2) == []


def test_witness_invariant_reports_offending_edge():
    c5 = cycle(5)
    bad = certify_witness_invariants(c5, c5.all_edges(), 3)
    assert bad and all(v.rule == "edge-nbhd" and v.lhs == 4 for v in bad)
    with pytest.raises(ValueError):
        certify_witness_invariants(complete(3), complete(3).all_edges(), 2)


def test_evaluate_report_serialisation():
    g = complete(4)
    report = evaluate(g, alpha1=2, tau=2, tau_b=2, b_val=2)
    d = report.as_dict()
    assert d["graph6"] == "C~"
    assert d["checks"]["thm-match"] == {"lhs": 4, "rhs": 4, "holds": True, "tight": True}
    assert d["join_profile"] == [1, 1]
    row = report.csv_row()
    assert row["egt_tight"] == 1 and row["join_profile"] == "1 1"
    assert report.failures() == []


def test_empty_graph_report():
    report = evaluate(Graph.empty(3), 0, 0, 0, 3)
    assert all(c.holds for c in report.checks.values())
    assert report.join_profile is None
