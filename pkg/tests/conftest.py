import random

import networkx as nx
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from planartest.core import Graph, build_graph

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=8, max_edges=None):
    """Simple graphs on 1..n with a random edge subset."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    es = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_edges)) if pairs else []
    return build_graph(n, es)


@st.composite
def connected_graphs(draw, min_n=1, max_n=6):
    """Connected graphs: a random spanning tree plus extra edges."""
    n = draw(st.integers(min_n, max_n))
    es = set()
    for v in range(2, n + 1):
        es.add((draw(st.integers(1, v - 1)), v))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    if pairs:
        es |= set(draw(st.lists(st.sampled_from(pairs), unique=True, max_size=n)))
    return build_graph(n, es)


def to_nx(G: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(G.vertices())
    g.add_edges_from(G.edges)
    return g


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return build_graph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(12345)


ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
