"""Exact counting, uniform sampling and intervention design for Markov
equivalence classes of DAGs, built on rooted clique trees of chordal
graphs."""

from .clique_tree import (
    CliqueTree,
    RootedCliqueTree,
    build_clique_tree,
    clique_satisfies_emission,
    compute_emission_sets,
    root_tree,
    rooted_orient,
)
from .count import (
    BigCount,
    MemoStore,
    canonical_key_component,
    canonical_key_subtree,
    component_size,
    mec_size,
    rooted_size,
)
from .errors import (
    EnumerationLimitError,
    InfeasibleParameterError,
    InvalidGraphError,
    MalformedHypothesisError,
    MecError,
    NotChordalError,
    PartiallyDirectedCycleError,
    UnrealizableHypothesisError,
)
from .generate import random_uccg
from .graph import (
    MixedGraph,
    bfs_levels,
    chain_components,
    is_chordal,
    is_connected,
    is_dag,
    markov_equivalent,
    meek_close,
    v_structures,
)
from .intervention import (
    InterventionReport,
    evaluate_targets,
    expected_resolved_exact,
    expected_resolved_mc,
    greedy_select,
    resolved_count,
    sde_experiment,
)
from .oracle import (
    EnumeratedMEC,
    brute_expected_resolved,
    brute_size,
    brute_size_with_prior,
    enumerate_mec,
)
from .prior import (
    HypothesisGraph,
    is_realizable,
    parent_set_counts,
    sample_many_with_prior,
    sample_with_prior,
    size_with_prior,
)
from .sample import sample_dag, sample_many

__version__ = "0.1.0"

__all__ = [
    "BigCount",
    "CliqueTree",
    "EnumeratedMEC",
    "EnumerationLimitError",
    "HypothesisGraph",
    "InfeasibleParameterError",
    "InterventionReport",
    "InvalidGraphError",
    "MalformedHypothesisError",
    "MecError",
    "MemoStore",
    "MixedGraph",
    "NotChordalError",
    "PartiallyDirectedCycleError",
    "RootedCliqueTree",
    "UnrealizableHypothesisError",
    "bfs_levels",
    "brute_expected_resolved",
    "brute_size",
    "brute_size_with_prior",
    "build_clique_tree",
    "canonical_key_component",
    "canonical_key_subtree",
    "chain_components",
    "clique_satisfies_emission",
    "component_size",
    "compute_emission_sets",
    "enumerate_mec",
    "evaluate_targets",
    "expected_resolved_exact",
    "expected_resolved_mc",
    "greedy_select",
    "is_chordal",
    "is_connected",
    "is_dag",
    "is_realizable",
    "markov_equivalent",
    "mec_size",
    "meek_close",
    "parent_set_counts",
    "random_uccg",
    "resolved_count",
    "root_tree",
    "rooted_orient",
    "rooted_size",
    "sample_dag",
    "sample_many",
    "sample_many_with_prior",
    "sample_with_prior",
    "sde_experiment",
    "size_with_prior",
    "v_structures",
]
