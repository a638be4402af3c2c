"""Canonical hypergraph and graph values plus the structural transforms
(2-section, complement, deletions, restriction, connectivity) everything
else is built on.

All values are immutable after construction and every operation is a pure
function, so they can be shared freely across parallel workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations


@dataclass(frozen=True)
class Hypergraph:
    """A hypergraph on dense vertex ids 0..n-1 with a canonical edge list.

    Edges are stored sorted internally and lexicographically as a list,
    so equal hypergraphs compare equal and serialize byte-identically.
    """

    n: int
    edges: tuple[tuple[int, ...], ...]

    def __init__(self, n: int, edges) -> None:
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        canon = []
        for e in edges:
            e = tuple(sorted(e))
            if len(e) == 0:
                raise ValueError("empty hyperedge")
            if len(set(e)) != len(e):
                raise ValueError(f"repeated vertex in hyperedge {e}")
            if e[0] < 0 or e[-1] >= n:
                raise ValueError(f"hyperedge {e} out of range [0, {n})")
            canon.append(e)
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise ValueError(f"duplicate hyperedge {a}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(canon))

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        """Each edge as a vertex bitmask (bit v set iff v in the edge)."""
        return tuple(sum(1 << v for v in e) for e in self.edges)

    def uniformity(self) -> int | None:
        """Common edge size, or None if sizes differ or there are no edges."""
        sizes = {len(e) for e in self.edges}
        if len(sizes) == 1:
            return sizes.pop()
        return None

    def is_uniform(self, s: int) -> bool:
        return all(len(e) == s for e in self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on dense vertex ids 0..n-1.

    Stored as a canonical sorted tuple of (u, v) pairs with u < v;
    adjacency sets and bitmasks are derived lazily.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, n: int, edges) -> None:
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        canon = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if u > v:
                u, v = v, u
            if u < 0 or v >= n:
                raise ValueError(f"edge ({u}, {v}) out of range [0, {n})")
            canon.add((u, v))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbr: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbr[u].add(v)
            nbr[v].add(u)
        return tuple(frozenset(s) for s in nbr)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_set

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


@dataclass(frozen=True)
class Matching:
    """A set of pairwise-disjoint hyperedges and the vertex set they cover."""

    edges: tuple[tuple[int, ...], ...]
    covered: frozenset[int]

    def __init__(self, edges) -> None:
        canon = tuple(sorted(tuple(sorted(e)) for e in edges))
        covered: set[int] = set()
        total = 0
        for e in canon:
            total += len(e)
            covered.update(e)
        if len(covered) != total:
            raise ValueError("matching edges are not pairwise disjoint")
        object.__setattr__(self, "edges", canon)
        object.__setattr__(self, "covered", frozenset(covered))

    def is_perfect_for(self, vertices: frozenset[int] | set[int]) -> bool:
        return self.covered == frozenset(vertices)


def two_section(h: Hypergraph) -> Graph:
    """Graph on the same vertices joining every two vertices that share a
    hyperedge. Size-1 hyperedges contribute nothing."""
    pairs: set[tuple[int, int]] = set()
    for e in h.edges:
        pairs.update(combinations(e, 2))
    return Graph(h.n, pairs)


def complement(g: Graph) -> Graph:
    present = g.edge_set
    pairs = [(u, v) for u, v in combinations(range(g.n), 2) if (u, v) not in present]
    return Graph(g.n, pairs)


def compaction_map(keep: set[int] | frozenset[int]) -> dict[int, int]:
    """Old id -> new dense id, preserving order of the kept vertices."""
    return {old: new for new, old in enumerate(sorted(keep))}


def delete_vertex(h: Hypergraph, v: int) -> tuple[Hypergraph, dict[int, int]]:
    """Remove vertex v and every hyperedge through it; remaining ids are
    recompacted and the old->new map is returned so witnesses can be
    translated back to the original ids."""
    if not 0 <= v < h.n:
        raise ValueError(f"vertex {v} out of range [0, {h.n})")
    keep = set(range(h.n)) - {v}
    remap = compaction_map(keep)
    edges = [tuple(remap[u] for u in e) for e in h.edges if v not in e]
    return Hypergraph(h.n - 1, edges), remap


def restrict(h: Hypergraph, x: set[int] | frozenset[int]) -> tuple[Hypergraph, dict[int, int]]:
    """Restrict to vertex set x: keep projections e & x of size >= 2,
    deduplicated; ids recompacted with the old->new map returned."""
    x = set(x)
    if not all(0 <= v < h.n for v in x):
        raise ValueError("restriction set out of range")
    remap = compaction_map(x)
    projected = set()
    for e in h.edges:
        cut = tuple(sorted(remap[u] for u in e if u in x))
        if len(cut) >= 2:
            projected.add(cut)
    return Hypergraph(len(x), projected), remap


def delete_edges(g: Graph, removed) -> Graph:
    """Delete the given edge set; all vertices stay."""
    gone = set()
    for u, v in removed:
        if u > v:
            u, v = v, u
        if (u, v) not in g.edge_set:
            raise ValueError(f"({u}, {v}) is not an edge")
        gone.add((u, v))
    return Graph(g.n, [e for e in g.edges if e not in gone])


def delete_vertices(g: Graph, w: set[int] | frozenset[int]) -> tuple[Graph, dict[int, int]]:
    """Delete the vertex set w with incident edges; ids recompacted,
    old->new map returned."""
    w = set(w)
    if not all(0 <= v < g.n for v in w):
        raise ValueError("deletion set out of range")
    keep = set(range(g.n)) - w
    remap = compaction_map(keep)
    edges = [(remap[u], remap[v]) for u, v in g.edges if u not in w and v not in w]
    return Graph(len(keep), edges), remap


def components(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Connected components as sorted vertex tuples, ordered by smallest
    member."""
    return components_within(g, range(g.n))


def components_within(g: Graph, active) -> tuple[tuple[int, ...], ...]:
    """Connected components of the subgraph induced by `active`, without
    building the induced graph; same ordering contract as components()."""
    active_set = set(active)
    seen: set[int] = set()
    out = []
    for start in sorted(active_set):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for v in g.adjacency[u]:
                if v in active_set and v not in comp:
                    comp.add(v)
                    stack.append(v)
        seen |= comp
        out.append(tuple(sorted(comp)))
    return tuple(out)


def is_connected(g: Graph) -> bool:
    """Vacuously true on 0 or 1 vertices."""
    return len(components(g)) <= 1
