from __future__ import annotations

import time
from itertools import combinations

import pytest
from hypothesis import given, settings

from critgraph.hypergraph import Hypergraph, Matching, complement, two_section
from critgraph.matching import (
    MATCHED,
    SKIPPED,
    TIMEOUT,
    UNMATCHABLE,
    SearchBudgetExceeded,
    all_deletions_matchable,
    find_perfect_matching,
    matching_to_coloring,
)
from critgraph.sampling import derive_seed, sample_hypergraph
from critgraph.suites import _matching_exists_oracle

from conftest import is_proper_coloring, uniform_hypergraphs, valid_matching_for


def complete_uniform(n, s):
    return Hypergraph(n, combinations(range(n), s))


def test_matching_type_rejects_overlap():
    with pytest.raises(ValueError):
        Matching([(0, 1, 2), (2, 3, 4)])


def test_find_pm_complete_small():
    m = find_perfect_matching(complete_uniform(6, 3))
    assert m is not None
    assert m.is_perfect_for(frozenset(range(6)))


def test_find_pm_uncoverable_vertex():
    assert find_perfect_matching(Hypergraph(6, [(0, 1, 2), (2, 3, 4)])) is None


def test_find_pm_divisibility_short_circuit():
    h = complete_uniform(5, 3)
    t0 = time.monotonic()
    assert find_perfect_matching(h) is None
    assert time.monotonic() - t0 < 0.1


def test_find_pm_rejects_non_uniform():
    with pytest.raises(ValueError):
        find_perfect_matching(Hypergraph(4, [(0, 1), (1, 2, 3)]))


def test_find_pm_empty_vertex_set():
    m = find_perfect_matching(Hypergraph(0, []))
    assert m is not None and m.edges == ()


@given(uniform_hypergraphs(s=3, max_n=12, max_edges=10))
@settings(max_examples=200, deadline=None)
def test_solver_equals_oracle_s3(h):
    got = find_perfect_matching(h, budget=30.0)
    assert (got is not None) == _matching_exists_oracle(h, 3)
    if got is not None:
        assert valid_matching_for(h, got, set(range(h.n)))


@given(uniform_hypergraphs(s=2, max_n=10, max_edges=12))
@settings(max_examples=150, deadline=None)
def test_solver_equals_oracle_s2(h):
    got = find_perfect_matching(h, budget=30.0)
    assert (got is not None) == _matching_exists_oracle(h, 2)


@given(uniform_hypergraphs(s=4, max_n=12, max_edges=8))
@settings(max_examples=150, deadline=None)
def test_solver_equals_oracle_s4(h):
    got = find_perfect_matching(h, budget=30.0)
    assert (got is not None) == _matching_exists_oracle(h, 4)


def test_s2_agrees_with_classical_graph_matching():
    # Graph case anchor: verdict equals maximum-matching size reaching n/2.
    import networkx as nx

    agreements = 0
    for i in range(200):
        n = 4 + (i % 4) * 2  # 4, 6, 8, 10
        h = sample_hypergraph(n, 2, 0.25 + 0.05 * (i % 5), derive_seed(31337, i))
        nxg = nx.Graph()
        nxg.add_nodes_from(range(n))
        nxg.add_edges_from(h.edges)
        classical = 2 * len(nx.max_weight_matching(nxg, maxcardinality=True)) == n
        assert (find_perfect_matching(h) is not None) == classical
        agreements += 1
    assert agreements == 200


def test_all_deletions_on_complete_hypergraph():
    report = all_deletions_matchable(complete_uniform(7, 3))
    assert report.all_matchable
    assert set(report.per_vertex) == set(range(7))
    for v, outcome in report.per_vertex.items():
        assert outcome.status == MATCHED
        assert valid_matching_for(complete_uniform(7, 3), outcome.matching, set(range(7)) - {v})


def test_all_deletions_isolated_vertex_fails():
    # Vertex 6 is isolated: any other deletion cannot cover it.
    h = Hypergraph(7, [(0, 1, 2), (3, 4, 5), (0, 3, 5), (1, 2, 4)])
    report = all_deletions_matchable(h)
    assert not report.all_matchable
    assert report.per_vertex[0].status == UNMATCHABLE
    assert report.per_vertex[6].status == MATCHED


def test_all_deletions_rejects_bad_modulus():
    with pytest.raises(ValueError):
        all_deletions_matchable(complete_uniform(6, 3))


def test_all_deletions_stop_early_marks_skipped():
    h = Hypergraph(7, [(0, 1, 2), (3, 4, 5)])
    report = all_deletions_matchable(h, stop_early=True)
    assert not report.all_matchable
    statuses = [report.per_vertex[v].status for v in range(7)]
    assert statuses[0] == UNMATCHABLE
    assert set(statuses[1:]) == {SKIPPED}


def test_all_deletions_edgeless_requires_explicit_s():
    h = Hypergraph(7, [])
    with pytest.raises(ValueError):
        all_deletions_matchable(h)
    report = all_deletions_matchable(h, s=3)
    assert not report.all_matchable


@given(uniform_hypergraphs(s=3, max_n=10, max_edges=9))
@settings(max_examples=60, deadline=None)
def test_per_vertex_verdicts_match_oracle(h):
    if h.n % 3 != 1:
        h = Hypergraph(h.n + (1 - h.n % 3) % 3, h.edges)
    report = all_deletions_matchable(h, budget=30.0, s=3)
    for v in range(h.n):
        kept = Hypergraph(
            h.n, [e for e in h.edges if v not in e]
        )
        # Oracle over the surviving edges, cover target V - v.
        expect = _deleted_oracle(kept, v, 3)
        assert (report.per_vertex[v].status == MATCHED) == expect


def _deleted_oracle(h: Hypergraph, removed: int, s: int) -> bool:
    want, rem = divmod(h.n - 1, s)
    if rem != 0:
        return False
    target = ((1 << h.n) - 1) & ~(1 << removed)
    for idx in combinations(range(len(h.edges)), want):
        union = 0
        ok = True
        for i in idx:
            m = h.edge_masks[i]
            if union & m:
                ok = False
                break
            union |= m
        if ok and union == target:
            return True
    return False


def test_budget_exhaustion_is_distinct():
    # A padded instance large enough that a zero-second budget trips
    # before the search finishes.
    h = complete_uniform(12, 3)
    with pytest.raises(SearchBudgetExceeded):
        find_perfect_matching(h, budget=0.0)
    report = all_deletions_matchable(complete_uniform(13, 3), budget=0.0)
    assert not report.all_matchable
    assert report.per_vertex[0].status == TIMEOUT


def test_matching_to_coloring_examples():
    m = Matching([(0, 1, 2), (3, 4, 5)])
    coloring = matching_to_coloring(m, removed=6, n=7)
    assert coloring == {0: 0, 1: 0, 2: 0, 3: 1, 4: 1, 5: 1}
    assert len(set(coloring.values())) == (7 - 1) // 3

    single = Matching([(0, 1, 2, 3)])
    assert set(matching_to_coloring(single, removed=4, n=5).values()) == {0}

    with pytest.raises(ValueError):
        matching_to_coloring(m, removed=0, n=7)


def test_coloring_proper_on_pipeline_complement():
    # On a real sampled instance, the derived coloring is proper for the
    # complement construction minus the removed vertex (edge-scan recheck).
    h = sample_hypergraph(10, 3, 0.5, 5)
    g = complement(two_section(h))
    report = all_deletions_matchable(h)
    for v, outcome in report.per_vertex.items():
        if outcome.status != MATCHED:
            continue
        coloring = matching_to_coloring(outcome.matching, v, h.n)
        assert is_proper_coloring(g, coloring, skip={v})
