"""Exact perfect-matching search in uniform hypergraphs.

The search is a recursive set-cover over vertex bitmasks: always branch on
the uncovered vertex with the fewest still-available hyperedges, and fail
a state as soon as some uncovered vertex has no available edge. Divisibility
of the uncovered count by the uniformity is checked once up front and then
preserved, since every step removes exactly one full edge. Complete: it
never misses an existing matching. A wall-clock budget separates "no
matching exists" from "gave up searching".
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .hypergraph import Hypergraph, Matching


class SearchBudgetExceeded(Exception):
    """Raised when the matching search hits its time budget; distinct from
    a definite refutation."""


MATCHED = "matched"
UNMATCHABLE = "unmatchable"
TIMEOUT = "timeout"
SKIPPED = "skipped"
CORRUPT = "corrupt"  # assigned by the certificate decoder, never by search


@dataclass(frozen=True)
class VertexOutcome:
    status: str  # MATCHED / UNMATCHABLE / TIMEOUT / SKIPPED
    matching: Matching | None


@dataclass(frozen=True)
class MatchabilityReport:
    """Per-vertex verdicts for single-vertex deletions: a witness matching
    where one exists, a failure marker otherwise."""

    per_vertex: dict[int, VertexOutcome]
    all_matchable: bool

    def first_failure(self) -> int | None:
        for v in sorted(self.per_vertex):
            if self.per_vertex[v].status != MATCHED:
                return v
        return None


def _uniformity_or_raise(h: Hypergraph) -> int | None:
    s = h.uniformity()
    if s is None and h.edges:
        raise ValueError("hypergraph is not uniform")
    return s


def _cover_search(
    edge_masks: list[int],
    target_mask: int,
    s: int,
    deadline: float | None,
) -> list[int] | None:
    """Indices of pairwise-disjoint edges whose union is exactly
    target_mask, or None. Edges must already lie inside target_mask."""
    n_bits = target_mask.bit_count()
    if n_bits % s != 0:
        return None

    incident: dict[int, list[int]] = {}
    v = target_mask
    while v:
        bit = v & -v
        incident[bit] = []
        v ^= bit
    for idx, mask in enumerate(edge_masks):
        m = mask
        while m:
            bit = m & -m
            incident[bit].append(idx)
            m ^= bit

    chosen: list[int] = []

    def recurse(uncovered: int) -> bool:
        if uncovered == 0:
            return True
        if deadline is not None and time.monotonic() > deadline:
            raise SearchBudgetExceeded
        # Branch on the most constrained uncovered vertex.
        best_edges: list[int] | None = None
        m = uncovered
        while m:
            bit = m & -m
            m ^= bit
            avail = [i for i in incident[bit] if edge_masks[i] & ~uncovered == 0]
            if best_edges is None or len(avail) < len(best_edges):
                best_edges = avail
                if not avail:
                    return False
        assert best_edges is not None
        for i in best_edges:
            chosen.append(i)
            if recurse(uncovered & ~edge_masks[i]):
                return True
            chosen.pop()
        return False

    return chosen if recurse(target_mask) else None


def find_perfect_matching(h: Hypergraph, budget: float | None = 10.0) -> Matching | None:
    """A perfect matching of h, or None if none exists. Raises
    SearchBudgetExceeded after `budget` seconds of search."""
    s = _uniformity_or_raise(h)
    if h.n == 0:
        return Matching(())
    if not h.edges:
        return None
    assert s is not None
    if h.n % s != 0:
        return None
    deadline = None if budget is None else time.monotonic() + budget
    full = (1 << h.n) - 1
    picked = _cover_search(list(h.edge_masks), full, s, deadline)
    if picked is None:
        return None
    return Matching(h.edges[i] for i in picked)


def find_matching_avoiding(
    h: Hypergraph, v: int, budget: float | None = 10.0
) -> Matching | None:
    """A perfect matching of the deletion of vertex v, expressed in the
    original vertex ids."""
    s = _uniformity_or_raise(h)
    if not 0 <= v < h.n:
        raise ValueError(f"vertex {v} out of range [0, {h.n})")
    if h.n == 1:
        return Matching(())
    if s is None or (h.n - 1) % s != 0:
        return None
    target = ((1 << h.n) - 1) & ~(1 << v)
    keep = [(m, e) for m, e in zip(h.edge_masks, h.edges) if not m & (1 << v)]
    deadline = None if budget is None else time.monotonic() + budget
    picked = _cover_search([m for m, _ in keep], target, s, deadline)
    if picked is None:
        return None
    return Matching(keep[i][1] for i in picked)


def all_deletions_matchable(
    h: Hypergraph,
    budget: float | None = 10.0,
    stop_early: bool = False,
    s: int | None = None,
) -> MatchabilityReport:
    """Check that every single-vertex deletion has a perfect matching,
    keeping the witnesses. With stop_early, vertices after the first
    failure are marked skipped. An edgeless hypergraph needs the intended
    uniformity s passed explicitly."""
    inferred = _uniformity_or_raise(h)
    if inferred is not None and s is not None and inferred != s:
        raise ValueError(f"hypergraph is {inferred}-uniform, expected {s}-uniform")
    s = inferred if inferred is not None else s
    if s is None:
        raise ValueError("hypergraph has no edges; pass the uniformity s explicitly")
    if h.n % s != 1:
        raise ValueError(f"need n = 1 (mod s), got n={h.n}, s={s}")
    per_vertex: dict[int, VertexOutcome] = {}
    failed = False
    for v in range(h.n):
        if failed and stop_early:
            per_vertex[v] = VertexOutcome(SKIPPED, None)
            continue
        try:
            m = find_matching_avoiding(h, v, budget=budget)
        except SearchBudgetExceeded:
            per_vertex[v] = VertexOutcome(TIMEOUT, None)
            failed = True
            continue
        if m is None:
            per_vertex[v] = VertexOutcome(UNMATCHABLE, None)
            failed = True
        else:
            per_vertex[v] = VertexOutcome(MATCHED, m)
    all_ok = all(o.status == MATCHED for o in per_vertex.values())
    return MatchabilityReport(per_vertex=per_vertex, all_matchable=all_ok)


def matching_to_coloring(m: Matching, removed: int, n: int) -> dict[int, int]:
    """Color class i = vertices of the i-th matching edge; a proper
    coloring of the complement construction minus `removed`, using
    exactly (n - 1) / s colors."""
    expected = set(range(n)) - {removed}
    if set(m.covered) != expected:
        raise ValueError("matching does not partition the vertex set minus the removed vertex")
    coloring: dict[int, int] = {}
    for i, e in enumerate(m.edges):
        for v in e:
            coloring[v] = i
    return coloring
