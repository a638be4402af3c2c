"""Executable checks of the deterministic structural facts behind the
construction, validated exhaustively on small instances:

  * a connected hypergraph has at most 1 + sum(|e| - 1) vertices;
  * a hypergraph whose every edge subset F spans >= sum over F of (|e| - 1)
    vertices has a cut set of at most 2 vertices (found constructively);
  * in the 2-section of a locally sparse uniform hypergraph, every
    (s+1)-vertex subset induces at most C(s,2) + 2 edges.

Each check either returns a verdict/witness or raises a typed error;
unexpected internal contradictions surface as CounterexampleFound so the
suite runner can serialize them instead of guessing a repair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .hypergraph import (
    Graph,
    Hypergraph,
    components,
    components_within,
    is_connected,
    two_section,
)
from .sparsity import check_sparsity


class CapExceeded(Exception):
    """Requested enumeration is larger than the configured cap."""


class HypothesisNotMet(Exception):
    """The check's structural hypothesis fails on this input, so the bound
    is not claimed; distinct from a violated bound."""


class CounterexampleFound(Exception):
    """An internal step contradicted the structural fact being checked."""


@dataclass(frozen=True)
class CutWitness:
    """A separating set of at most two vertices with the two sides it
    leaves disconnected (side_b may itself be a union of components)."""

    w: tuple[int, ...]
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]


def connected_bound_check(h: Hypergraph) -> bool:
    """Whether |V| <= 1 + sum(|e| - 1); holds for every connected
    hypergraph. Raises on disconnected input."""
    if not is_connected(two_section(h)):
        raise ValueError("hypergraph is not connected")
    return h.n <= 1 + sum(len(e) - 1 for e in h.edges)


def density_hypothesis_check(h: Hypergraph, cap_edges: int = 22) -> bool:
    """Exhaustively test that every nonempty edge subset F spans at least
    sum over F of (|e| - 1) vertices."""
    if len(h.edges) > cap_edges:
        raise CapExceeded(f"{len(h.edges)} edges exceeds brute-force cap {cap_edges}")
    masks = h.edge_masks
    sizes = [len(e) for e in h.edges]
    for r in range(1, len(h.edges) + 1):
        for idx in combinations(range(len(h.edges)), r):
            union = 0
            need = 0
            for i in idx:
                union |= masks[i]
                need += sizes[i] - 1
            if union.bit_count() < need:
                return False
    return True


def _validate_cut(g: Graph, witness: CutWitness, h: Hypergraph) -> None:
    """Re-verify a cut witness directly against the full 2-section instead
    of trusting the construction's bookkeeping."""
    w, a, b = set(witness.w), set(witness.side_a), set(witness.side_b)
    problems = []
    if len(w) > 2:
        problems.append(f"cut set has {len(w)} > 2 vertices")
    if not a or not b:
        problems.append("a cut side is empty")
    if a & b or a & w or b & w:
        problems.append("cut parts overlap")
    if a | b | w != set(range(g.n)):
        problems.append("cut parts do not cover the vertex set")
    for u, v in g.edges:
        if (u in a and v in b) or (u in b and v in a):
            problems.append(f"edge ({u}, {v}) joins the two sides")
            break
    if problems:
        raise CounterexampleFound(
            f"invalid cut witness for {h.n=} edges={h.edges}: " + "; ".join(problems)
        )


def find_small_cut(h: Hypergraph) -> CutWitness:
    """A set W of at most two vertices whose deletion disconnects the
    2-section, for any hypergraph with n >= 4, V not an edge, satisfying
    the per-subset span condition of density_hypothesis_check.

    When some edge e0 has size >= 3: delete e0, take the component C of the
    smallest vertex outside e0, and cut at W = e0 & C; the span condition
    forces |W| <= 2 and both remaining sides nonempty. Otherwise the
    2-section is a graph of maximum degree <= 2 after dropping size-1
    edges, where the lexicographically smallest disconnecting W of size
    <= 2 is found directly.
    """
    if h.n < 4:
        raise ValueError(f"need at least 4 vertices, got {h.n}")
    if tuple(range(h.n)) in h.edges:
        raise ValueError("the full vertex set is a hyperedge")
    if not density_hypothesis_check(h):
        raise HypothesisNotMet("an edge subset spans fewer vertices than required")

    g = two_section(h)
    big = [e for e in h.edges if len(e) >= 3]
    if big:
        e0 = big[0]
        outside = sorted(set(range(h.n)) - set(e0))
        v = outside[0]
        reduced = Hypergraph(h.n, [e for e in h.edges if e != e0])
        comp = next(
            c for c in components(two_section(reduced)) if v in c
        )
        w = tuple(sorted(set(e0) & set(comp)))
        if len(w) > 2:
            raise CounterexampleFound(
                f"component meets the removed edge in {len(w)} > 2 vertices: "
                f"n={h.n} edges={h.edges}"
            )
        side_a = tuple(sorted(set(comp) - set(e0)))
        side_b = tuple(sorted(set(range(h.n)) - set(comp)))
        witness = CutWitness(w=w, side_a=side_a, side_b=side_b)
        _validate_cut(g, witness, h)
        return witness

    # All edges have size <= 2; size-1 edges do not affect the 2-section,
    # so the graph has max degree <= 2 here and a tiny brute-force scan in
    # lexicographic order finds the smallest valid cut set.
    candidates: list[tuple[int, ...]] = [()]
    candidates += [(v,) for v in range(h.n)]
    candidates += list(combinations(range(h.n), 2))
    for w in candidates:
        active = set(range(h.n)) - set(w)
        if len(active) < 2:
            continue
        comps = components_within(g, active)
        if len(comps) >= 2:
            witness = CutWitness(
                w=w,
                side_a=comps[0],
                side_b=tuple(sorted(v for c in comps[1:] for v in c)),
            )
            _validate_cut(g, witness, h)
            return witness
    raise CounterexampleFound(
        f"no cut of size <= 2 exists despite the span condition: n={h.n} edges={h.edges}"
    )


def edge_bound_check(h: Hypergraph, s: int) -> tuple[bool, tuple[tuple[int, ...], int]]:
    """Whether every (s+1)-vertex subset of the 2-section induces at most
    C(s,2) + 2 edges; returns the maximizing subset as evidence either way.

    Requires the span condition for all edge subsets smaller than 2^(s+1)
    (checked through the sparsity window 2^(s+1) - 1); failing that raises
    HypothesisNotMet rather than reporting on an out-of-scope instance.
    """
    if s < 3:
        raise ValueError(f"need s >= 3, got {s}")
    if not h.is_uniform(s):
        raise ValueError(f"hypergraph is not {s}-uniform")
    if h.n < s + 1:
        raise ValueError(f"need at least {s + 1} vertices, got {h.n}")
    window = 2 ** (s + 1) - 1
    if not check_sparsity(h, window, s).holds:
        raise HypothesisNotMet("sparsity window check failed")
    g = two_section(h)
    masks = g.adjacency_masks
    bound = math.comb(s, 2) + 2
    worst_count = -1
    worst: tuple[int, ...] = ()
    for subset in combinations(range(g.n), s + 1):
        mask = 0
        count = 0
        for v in subset:
            count += (masks[v] & mask).bit_count()
            mask |= 1 << v
        if count > worst_count:
            worst_count = count
            worst = subset
    return worst_count <= bound, (worst, worst_count)


def enumerate_hypergraphs(
    n: int,
    max_edges: int,
    sizes: set[int],
    cap: int = 6_000_000,
):
    """All labelled hypergraphs on n vertices with at most max_edges edges
    drawn from the given size classes, in canonical order (by edge count,
    then lexicographic edge combination)."""
    candidates: list[tuple[int, ...]] = []
    for size in sorted(sizes):
        if 1 <= size <= n:
            candidates.extend(combinations(range(n), size))
    candidates.sort()
    top = min(max_edges, len(candidates))
    total = sum(math.comb(len(candidates), j) for j in range(top + 1))
    if total > cap:
        raise CapExceeded(f"{total} hypergraphs exceeds cap {cap}")
    for count in range(top + 1):
        for chosen in combinations(candidates, count):
            yield Hypergraph(n, chosen)
