"""Contraction machinery: shrunk patterns, contracted copy hypergraphs, shadows, selection."""

from planartest.pipeline.contract import (
    ContractedHypergraph,
    build_Q,
    contract_step,
    is_consistent,
    is_safe,
    unsafe_vertices,
)
from planartest.pipeline.hexplore import HExplored, HVerdict, find_colored_pattern, hrlbd, hrlbfs
from planartest.pipeline.hypergraph import LabeledHyperedge, LabeledHypergraph
from planartest.pipeline.represent import RepresentativeFunctions, representatives, stages_for
from planartest.pipeline.select import (
    ALResult,
    LevelStep,
    PruneResult,
    SafeSelection,
    al_select,
    degree_prune,
    distinct_neighbor_count,
    many_safe,
    next_level,
    prune_to_safe,
)
from planartest.pipeline.shadow import ColorShadow, ShadowGraph, shadow
from planartest.pipeline.shrink import ShrunkPattern, pattern_at, shrink_pattern, shrink_steps

__all__ = [
    "ALResult",
    "ColorShadow",
    "ContractedHypergraph",
    "HExplored",
    "HVerdict",
    "LabeledHyperedge",
    "LabeledHypergraph",
    "LevelStep",
    "PruneResult",
    "RepresentativeFunctions",
    "SafeSelection",
    "ShadowGraph",
    "ShrunkPattern",
    "al_select",
    "build_Q",
    "contract_step",
    "degree_prune",
    "distinct_neighbor_count",
    "find_colored_pattern",
    "hrlbd",
    "hrlbfs",
    "is_consistent",
    "is_safe",
    "many_safe",
    "next_level",
    "pattern_at",
    "prune_to_safe",
    "representatives",
    "shadow",
    "shrink_pattern",
    "shrink_steps",
    "stages_for",
    "unsafe_vertices",
]
