"""Randomized construction and certified verification of k-chromatic
vertex-critical graphs whose chromatic number survives the deletion of any
r edges."""

from .certify import (
    Certificate,
    check_certificate,
    min_subset_edges,
    verify_construction,
)
from .chromatic import exact_chromatic, exact_independence
from .hypergraph import (
    Graph,
    Hypergraph,
    Matching,
    complement,
    components,
    delete_edges,
    delete_vertex,
    delete_vertices,
    restrict,
    two_section,
)
from .matching import (
    MatchabilityReport,
    SearchBudgetExceeded,
    all_deletions_matchable,
    find_perfect_matching,
    matching_to_coloring,
)
from .sampling import (
    ConstructionParams,
    derive_params,
    pm_threshold_sweep,
    sample_amplified,
    sample_hypergraph,
    shamir_p,
)
from .sparsity import SparsityVerdict, brute_force_sparsity, check_sparsity, excess

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "ConstructionParams",
    "Graph",
    "Hypergraph",
    "MatchabilityReport",
    "Matching",
    "SearchBudgetExceeded",
    "SparsityVerdict",
    "all_deletions_matchable",
    "brute_force_sparsity",
    "check_certificate",
    "check_sparsity",
    "complement",
    "components",
    "delete_edges",
    "delete_vertex",
    "delete_vertices",
    "derive_params",
    "exact_chromatic",
    "exact_independence",
    "excess",
    "find_perfect_matching",
    "matching_to_coloring",
    "min_subset_edges",
    "pm_threshold_sweep",
    "restrict",
    "sample_amplified",
    "sample_hypergraph",
    "shamir_p",
    "two_section",
    "verify_construction",
]
