"""Parameter derivation and seeded sampling of binomial random uniform
hypergraphs, plus the empirical perfect-matching threshold sweep.

Randomness comes from numpy's Philox counter-based generator: the seed and
draw order fully determine every sample, on any platform, so certificates
are reproducible bit for bit. Derived streams (per restart, per sweep cell)
are split off the base seed with SeedSequence spawn keys.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .hypergraph import Hypergraph

#: Multiplier applied to the factorial threshold constant when the caller
#: does not override C. Twice the sharp constant trades sample density for
#: better odds of matchability at small vertex counts.
DEFAULT_C_FACTOR = 2.0


def default_constant(s: int) -> float:
    """Default threshold constant C = 2 * (s-1)!."""
    return DEFAULT_C_FACTOR * math.factorial(s - 1)


@dataclass(frozen=True)
class ConstructionParams:
    """Every quantity the construction derives from the deletion budget r
    and the target chromatic number k.

    Derived values: s = r + 3, m = 2^(s+1), n = s(k-1) + 1,
    l = ceil(2 log2 n), p = min(1, C ln(n-1) / (n-1)^(s-1)) and
    q = min(1, l p). The single-round probability p is evaluated at n - 1
    because matchability is checked on the n - 1 vertices left after each
    deletion; q folds the l amplification rounds into one binomial draw.
    """

    r: int
    s: int
    m: int
    k: int
    n: int
    C: float
    l: int
    p: float
    q: float

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError(f"deletion budget r must be >= 1, got {self.r}")
        if self.k < 2:
            raise ValueError(f"target chromatic number k must be >= 2, got {self.k}")
        if self.C <= 0:
            raise ValueError(f"threshold constant C must be positive, got {self.C}")
        checks = {
            "s": self.s == self.r + 3,
            "m": self.m == 2 ** (self.s + 1),
            "n": self.n == self.s * (self.k - 1) + 1,
            "l": self.l == amplification_rounds(self.n),
            "p": self.p == shamir_p(self.n - 1, self.s, self.C),
            "q": self.q == min(1.0, self.l * self.p),
        }
        bad = [name for name, ok in checks.items() if not ok]
        if bad:
            raise ValueError(f"inconsistent derived fields: {', '.join(bad)}")


def amplification_rounds(n: int) -> int:
    """ceil(2 log2 n) independent sampling rounds."""
    return math.ceil(2 * math.log2(n))


def shamir_p(n: int, s: int, C: float) -> float:
    """Edge probability C ln(n) / n^(s-1) at which a binomial s-uniform
    random hypergraph acquires a perfect matching (Shamir's problem
    threshold), clamped to [0, 1]."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if s < 2:
        raise ValueError(f"need s >= 2, got {s}")
    return min(1.0, C * math.log(n) / n ** (s - 1))


def derive_params(r: int, k: int, C: float | None = None) -> ConstructionParams:
    """All construction parameters for deletion budget r and target
    chromatic number k; C defaults to 2 * (s-1)!."""
    if r < 1:
        raise ValueError(f"deletion budget r must be >= 1, got {r}")
    if k < 2:
        raise ValueError(f"target chromatic number k must be >= 2, got {k}")
    s = r + 3
    if C is None:
        C = default_constant(s)
    n = s * (k - 1) + 1
    l = amplification_rounds(n)
    p = shamir_p(n - 1, s, C)
    return ConstructionParams(
        r=r, s=s, m=2 ** (s + 1), k=k, n=n, C=C, l=l, p=p, q=min(1.0, l * p)
    )


def derive_seed(base: int, *path: int) -> int:
    """Deterministic 64-bit child seed for an independent stream."""
    seq = np.random.SeedSequence(base, spawn_key=tuple(path))
    return int(seq.generate_state(1, np.uint64)[0])


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))


def _unrank_subset(rank: int, n: int, s: int) -> tuple[int, ...]:
    """rank-th s-subset of [0, n) in lexicographic order."""
    out = []
    x = 0
    for i in range(s):
        while math.comb(n - 1 - x, s - 1 - i) <= rank:
            rank -= math.comb(n - 1 - x, s - 1 - i)
            x += 1
        out.append(x)
        x += 1
    return tuple(out)


def _sampled_ranks(total: int, p: float, rng: np.random.Generator) -> list[int]:
    """Indices of a Bernoulli(p) subset of range(total), by geometric
    skipping so work scales with the output, not with `total`."""
    if p <= 0.0:
        return []
    if p >= 1.0:
        return list(range(total))
    log_keep = math.log1p(-p)
    ranks = []
    pos = -1
    while True:
        u = 1.0 - rng.random()  # in (0, 1]
        pos += 1 + int(math.log(u) / log_keep)
        if pos >= total:
            return ranks
        ranks.append(pos)


def sample_hypergraph(n: int, s: int, p: float, seed: int) -> Hypergraph:
    """Binomial s-uniform random hypergraph: every s-subset of [0, n)
    is a hyperedge independently with probability p. Equal
    (n, s, p, seed) give identical output."""
    if not 2 <= s <= n:
        raise ValueError(f"need 2 <= s <= n, got s={s}, n={n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability out of range: {p}")
    ranks = _sampled_ranks(math.comb(n, s), p, _rng(seed))
    return Hypergraph(n, [_unrank_subset(r, n, s) for r in ranks])


def sample_union_rounds(n: int, s: int, p: float, rounds: int, seed: int) -> Hypergraph:
    """Union of `rounds` independent binomial samples at probability p;
    distribution equals a single binomial draw at 1 - (1-p)^rounds."""
    if rounds < 1:
        raise ValueError(f"need rounds >= 1, got {rounds}")
    edges: set[tuple[int, ...]] = set()
    for round_idx in range(rounds):
        edges.update(sample_hypergraph(n, s, p, derive_seed(seed, round_idx)).edges)
    return Hypergraph(n, edges)


def sample_amplified(n: int, s: int, params: ConstructionParams, seed: int) -> Hypergraph:
    """The amplified construction: union of params.l independent samples
    at probability params.p (kept for distribution-equivalence tests; the
    pipeline itself draws once at q)."""
    if params.n != n or params.s != s:
        raise ValueError(f"params derived for (n={params.n}, s={params.s}), got (n={n}, s={s})")
    return sample_union_rounds(n, s, params.p, params.l, seed)


@dataclass(frozen=True)
class SweepPoint:
    n: int
    p: float
    samples: int
    successes: int

    @property
    def fraction(self) -> float:
        return self.successes / self.samples


def coupled_hypergraph_family(n: int, s: int, p_levels: list[float], seed: int) -> list[Hypergraph]:
    """One hypergraph per probability level, coupled so the edge sets are
    nested along increasing p: each candidate edge gets an independent
    uniform threshold and appears at exactly the levels above it. Marginally
    each level is an ordinary binomial sample at its p; jointly the family
    is monotone, so any edge-monotone event holds along a suffix of levels.
    """
    if not p_levels:
        return []
    if any(not 0.0 <= p <= 1.0 for p in p_levels):
        raise ValueError("probability out of range")
    p_max = max(p_levels)
    rng = _rng(seed)
    ranks = _sampled_ranks(math.comb(n, s), p_max, rng)
    # Conditioned on inclusion at level p_max, an edge's latent uniform is
    # uniform on [0, p_max]; drawing it only for included edges matches the
    # joint law of thresholding a full table of uniforms.
    thresholds = [p_max * rng.random() for _ in ranks]
    family = []
    for p in p_levels:
        chosen = [r for r, t in zip(ranks, thresholds) if t <= p]
        family.append(Hypergraph(n, [_unrank_subset(r, n, s) for r in chosen]))
    return family


def pm_threshold_sweep(
    s: int,
    n_list: list[int],
    p_grid: list[float],
    samples: int,
    seed: int,
    matching_budget: float = 10.0,
) -> list[SweepPoint]:
    """Empirical probability that a binomial s-uniform hypergraph has a
    perfect matching, for every (n, p) in n_list x p_grid.

    Samples are coupled across the grid (see coupled_hypergraph_family), so
    for a fixed n the success counts are non-decreasing in p exactly, and
    once a sample succeeds at some level no further search is run for it.
    """
    from .matching import find_perfect_matching

    if samples < 1:
        raise ValueError(f"need samples >= 1, got {samples}")
    for n in n_list:
        if n % s != 0:
            raise ValueError(f"n={n} not divisible by s={s}")
    levels = sorted(p_grid)
    out = []
    for n_idx, n in enumerate(n_list):
        successes = [0] * len(levels)
        for sample_idx in range(samples):
            cell_seed = derive_seed(seed, n_idx, sample_idx)
            family = coupled_hypergraph_family(n, s, levels, cell_seed)
            for level, h in enumerate(family):
                if find_perfect_matching(h, budget=matching_budget) is not None:
                    for j in range(level, len(levels)):
                        successes[j] += 1
                    break
        for p, won in zip(levels, successes):
            out.append(SweepPoint(n=n, p=p, samples=samples, successes=won))
    return out
