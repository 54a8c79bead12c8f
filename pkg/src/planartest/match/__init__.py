"""Exact small-instance oracles: embeddings, packings, distances, planarity, audits."""

from planartest.match.audit import AuditReport, semi_subgraph_freeness_audit, within_distance
from planartest.match.embed import (
    MAX_PATTERN,
    CopyEmbedding,
    automorphisms,
    colored_form,
    contains_copy,
    enumerate_copies,
    find_copy_in_edges,
    iter_embeddings,
)
from planartest.match.graphs import all_graphs, are_isomorphic, canonical_form, graph_certificate
from planartest.match.packing import (
    NOT_CERTIFIED,
    BestColoring,
    CopySet,
    FarnessCertificate,
    as_fraction,
    best_coloring,
    certify_far,
    colored_survivors,
    exact_deletion_distance,
    greedy_packing,
    max_packing_size,
    min_hitting_set,
    random_coloring,
    survival_probability,
)
from planartest.match.planarity import euler_ok, find_k5_minor, find_k33_minor, is_planar_small, planar_edge_cap

__all__ = [
    "MAX_PATTERN",
    "NOT_CERTIFIED",
    "AuditReport",
    "BestColoring",
    "CopyEmbedding",
    "CopySet",
    "FarnessCertificate",
    "all_graphs",
    "are_isomorphic",
    "as_fraction",
    "automorphisms",
    "best_coloring",
    "canonical_form",
    "certify_far",
    "colored_form",
    "colored_survivors",
    "contains_copy",
    "enumerate_copies",
    "euler_ok",
    "planar_edge_cap",
    "exact_deletion_distance",
    "find_copy_in_edges",
    "find_k33_minor",
    "find_k5_minor",
    "graph_certificate",
    "greedy_packing",
    "is_planar_small",
    "iter_embeddings",
    "max_packing_size",
    "min_hitting_set",
    "random_coloring",
    "semi_subgraph_freeness_audit",
    "survival_probability",
    "within_distance",
]
