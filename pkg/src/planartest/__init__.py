"""Property testers for subgraph freeness of planar graphs in the random-neighbor query model."""

from planartest.core import (
    Coloring,
    Graph,
    OracleKind,
    QueryMeter,
    build_graph,
    make_rng,
    random_neighbor,
    random_vertex,
)
from planartest.errors import PlanarTestError
from planartest.explore import canonical_tester, rlbfs, traverse
from planartest.instances import InstanceKind, InstanceSpec, gen_instance, named_pattern, parse_instance_spec
from planartest.testers import (
    Decision,
    TesterParams,
    TestVerdict,
    connectivity_test_distinct,
    default_schedule,
    family_test,
    matching_indistinguishability,
    rbe,
    rlbd,
    test_disconnected,
)

__version__ = "0.1.0"

__all__ = [
    "Coloring",
    "Decision",
    "Graph",
    "InstanceKind",
    "InstanceSpec",
    "OracleKind",
    "PlanarTestError",
    "QueryMeter",
    "TestVerdict",
    "TesterParams",
    "build_graph",
    "canonical_tester",
    "connectivity_test_distinct",
    "default_schedule",
    "family_test",
    "gen_instance",
    "make_rng",
    "matching_indistinguishability",
    "named_pattern",
    "parse_instance_spec",
    "random_neighbor",
    "random_vertex",
    "rbe",
    "rlbd",
    "rlbfs",
    "test_disconnected",
    "traverse",
]
