from __future__ import annotations

import math
from itertools import combinations

import pytest
from hypothesis import given
import hypothesis.strategies as st

from critgraph.sampling import (
    ConstructionParams,
    amplification_rounds,
    coupled_hypergraph_family,
    default_constant,
    derive_params,
    derive_seed,
    pm_threshold_sweep,
    sample_amplified,
    sample_hypergraph,
    sample_union_rounds,
    shamir_p,
)


def test_derive_params_reference_values():
    p1 = derive_params(1, 6, 12.0)
    assert (p1.s, p1.m, p1.n) == (4, 32, 21)
    p2 = derive_params(2, 6, 48.0)
    assert (p2.s, p2.m, p2.n) == (5, 64, 26)
    p3 = derive_params(1, 2, 12.0)
    assert (p3.s, p3.m, p3.n) == (4, 32, 5)


def test_derive_params_default_constant():
    params = derive_params(1, 6)
    assert params.C == 2.0 * math.factorial(3) == default_constant(4)


def test_derive_params_rejects_bad_input():
    with pytest.raises(ValueError):
        derive_params(0, 6)
    with pytest.raises(ValueError):
        derive_params(1, 1)


def test_params_invariant_enforced():
    good = derive_params(1, 4)
    with pytest.raises(ValueError):
        ConstructionParams(**{**vars(good), "m": good.m + 1})
    with pytest.raises(ValueError):
        ConstructionParams(**{**vars(good), "q": 0.5})


def test_shamir_p_frozen_values():
    assert shamir_p(16, 2, 1.0) == pytest.approx(0.17328679513998632, abs=1e-15)
    assert shamir_p(2, 2, 100.0) == 1.0
    assert shamir_p(27, 3, 4.0) == pytest.approx(0.01808415289988658, abs=1e-15)


def test_amplification_rounds():
    assert amplification_rounds(21) == 9
    assert amplification_rounds(16) == 8  # exact power of two
    assert amplification_rounds(5) == 5


@given(st.integers(2, 30), st.integers(2, 5))
def test_derive_params_modular_invariants(k, r):
    params = derive_params(r, k)
    assert params.n % params.s == 1
    assert params.m == 2 ** (params.s + 1)
    assert 0.0 <= params.q <= 1.0


def test_sample_extremes():
    assert sample_hypergraph(6, 3, 0.0, 1).edges == ()
    full = sample_hypergraph(5, 3, 1.0, 1)
    assert len(full.edges) == math.comb(5, 3)
    assert full.edges == tuple(combinations(range(5), 3))


def test_sample_determinism_bytes():
    a = sample_hypergraph(20, 3, 0.13, 99)
    b = sample_hypergraph(20, 3, 0.13, 99)
    assert a == b
    assert repr(a.edges) == repr(b.edges)
    assert a != sample_hypergraph(20, 3, 0.13, 100)


def test_sample_edges_canonical():
    h = sample_hypergraph(15, 4, 0.2, 5)
    assert list(h.edges) == sorted(set(h.edges))
    assert all(list(e) == sorted(set(e)) and len(e) == 4 for e in h.edges)


def test_sample_binomial_statistics():
    # Mean edge count over 100 seeds within 4 standard errors of N*p.
    n, s, p = 20, 3, 0.1
    total_candidates = math.comb(n, s)
    counts = [len(sample_hypergraph(n, s, p, seed).edges) for seed in range(100)]
    mean = sum(counts) / len(counts)
    expect = total_candidates * p
    stderr = math.sqrt(total_candidates * p * (1 - p) / len(counts))
    assert abs(mean - expect) <= 4 * stderr


def test_sample_per_edge_marginal():
    # A fixed edge appears with frequency ~ p across seeds.
    n, s, p = 8, 3, 0.3
    target = (0, 1, 2)
    hits = sum(target in sample_hypergraph(n, s, p, seed).edges for seed in range(400))
    stderr = math.sqrt(p * (1 - p) / 400)
    assert abs(hits / 400 - p) <= 4 * stderr


def test_amplified_matches_closed_form_density():
    # Empirical edge density over 200 seeds within 4 standard errors of
    # 1 - (1 - p)^l; reference value for (n=13, s=3, l=8, p=0.01) frozen
    # from the closed form.
    assert 1 - 0.99**8 == pytest.approx(0.07725530557207994, abs=1e-15)
    total = math.comb(13, 3)
    qq = 1 - 0.99**8
    counts = [len(sample_union_rounds(13, 3, 0.01, 8, seed).edges) for seed in range(200)]
    mean = sum(counts) / len(counts)
    stderr = math.sqrt(total * qq * (1 - qq) / 200)
    assert abs(mean - total * qq) <= 4 * stderr


def test_amplified_empty_at_p_zero():
    assert sample_union_rounds(13, 4, 0.0, 8, seed=3).edges == ()


def test_amplified_single_round_equals_plain():
    # One round is exactly one binomial draw through the derived stream.
    for seed in (0, 7, 123):
        assert sample_union_rounds(12, 3, 0.2, 1, seed) == sample_hypergraph(
            12, 3, 0.2, derive_seed(seed, 0)
        )


def test_amplified_uses_params_fields():
    params = derive_params(1, 4)  # n=13, s=4, l=8
    assert (params.n, params.l) == (13, 8)
    assert sample_amplified(13, 4, params, 5) == sample_union_rounds(
        13, 4, params.p, params.l, 5
    )
    with pytest.raises(ValueError):
        sample_amplified(12, 4, params, 5)


@given(st.floats(0.0, 1.0), st.integers(1, 40))
def test_union_probability_below_linear_bound(p, rounds):
    assert 1 - (1 - p) ** rounds <= rounds * p + 1e-12


def test_coupled_family_nested_and_marginal():
    levels = [0.0, 0.02, 0.05, 0.1, 0.25]
    fam = coupled_hypergraph_family(12, 3, levels, 77)
    for lo, hi in zip(fam, fam[1:]):
        assert set(lo.edges) <= set(hi.edges)
    assert fam[0].edges == ()


def test_sweep_extremes_and_determinism():
    pts = pm_threshold_sweep(3, [6], [0.0, 1.0], 25, seed=4)
    frac = {pt.p: pt.fraction for pt in pts}
    assert frac[0.0] == 0.0
    assert frac[1.0] == 1.0
    again = pm_threshold_sweep(3, [6], [0.0, 1.0], 25, seed=4)
    assert pts == again


def test_sweep_rejects_bad_divisibility():
    with pytest.raises(ValueError):
        pm_threshold_sweep(3, [7], [0.1], 5, seed=1)


def test_sweep_monotone_exact_by_coupling():
    grid = [i / 50 for i in range(8)]
    pts = pm_threshold_sweep(3, [9], grid, 60, seed=11)
    fractions = [pt.fraction for pt in sorted(pts, key=lambda x: x.p)]
    assert fractions == sorted(fractions)


def test_derive_seed_stable_and_distinct():
    assert derive_seed(1, 2, 3) == derive_seed(1, 2, 3)
    assert derive_seed(1, 2, 3) != derive_seed(1, 3, 2)
    assert derive_seed(5) != derive_seed(6)
