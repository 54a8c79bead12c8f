import random
from collections import Counter

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs, to_nx
from planartest.core import (
    EXHAUSTED,
    Coloring,
    DistinctNeighborOracle,
    QueryMeter,
    build_graph,
    degree_query,
    indexed_neighbor,
    make_rng,
    norm_edge,
    random_neighbor,
    random_vertex,
)
from planartest.errors import EmptyGraph, IndexOutOfRange, IsolatedVertex, OutOfRange, SelfLoop


def test_build_graph_collapses_duplicates():
    G = build_graph(3, [(1, 2), (2, 1), (2, 3)])
    assert G.m == 2
    assert G.adj[2] == (1, 3)
    assert G.adj[0] == ()


def test_build_graph_rejects_bad_edges():
    with pytest.raises(SelfLoop):
        build_graph(3, [(2, 2)])
    with pytest.raises(OutOfRange):
        build_graph(3, [(1, 4)])
    with pytest.raises(OutOfRange):
        build_graph(3, [(0, 1)])


@given(graphs(max_n=9))
def test_graph_matches_networkx(G):
    g = to_nx(G)
    assert G.m == g.number_of_edges()
    for v in G.vertices():
        assert G.degree(v) == g.degree(v)
        assert set(G.neighbors(v)) == set(g.neighbors(v))
        assert list(G.neighbors(v)) == sorted(G.neighbors(v))
    comps = sorted(sorted(c) for c in nx.connected_components(g))
    assert sorted(G.components()) == comps
    assert sum(G.degrees()) == 2 * G.m


@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_induced_relabels_in_order(G, r):
    keep = r.sample(list(G.vertices()), r.randint(0, G.n))
    sub = G.induced(keep)
    assert sub.n == len(keep)
    for i, u in enumerate(keep, 1):
        for j, v in enumerate(keep, 1):
            if i < j:
                assert sub.has_edge(i, j) == G.has_edge(u, v)


def test_norm_edge():
    assert norm_edge(5, 2) == (2, 5) == norm_edge(2, 5)


def test_coloring_constructors():
    c = Coloring.from_mapping(3, {1: 2, 2: 1, 3: 2})
    assert c.n == 3 and c[1] == 2 and c[2] == 1
    assert Coloring.from_list([2, 1, 2]) == c
    assert c.monochromatic_edges([(1, 3), (1, 2)]) == [(1, 3)]
    with pytest.raises(ValueError):
        Coloring.from_mapping(3, {1: 1})


def test_random_vertex_and_neighbor_count_queries():
    G = build_graph(4, [(1, 2), (2, 3)])
    m = QueryMeter()
    r = random.Random(0)
    for _ in range(50):
        v = random_vertex(G, m, r)
        assert 1 <= v <= 4
    assert m.random_vertex_count == 50
    for _ in range(30):
        assert random_neighbor(G, 2, m, r) in (1, 3)
    assert m.random_neighbor_count == 30 and m.total == 80
    with pytest.raises(IsolatedVertex):
        random_neighbor(G, 4, m, r)
    with pytest.raises(EmptyGraph):
        random_vertex(build_graph(0, []), m, r)


def test_random_neighbor_is_uniform():
    G = build_graph(5, [(1, k) for k in range(2, 6)])
    r = random.Random(1)
    c = Counter(random_neighbor(G, 1, QueryMeter(), r) for _ in range(40000))
    for k in range(2, 6):
        assert abs(c[k] / 40000 - 0.25) < 4 * (0.25 * 0.75 / 40000) ** 0.5


def test_distinct_neighbor_oracle_reveals_each_neighbor_once():
    G = build_graph(5, [(1, k) for k in range(2, 6)])
    m = QueryMeter()
    o = DistinctNeighborOracle(G, m, random.Random(3))
    got = [o.query(1) for _ in range(4)]
    assert sorted(got) == [2, 3, 4, 5]
    assert o.query(1) is EXHAUSTED
    assert o.query(1) is EXHAUSTED
    assert m.distinct_neighbor_count == 6


def test_degree_and_indexed_queries():
    G = build_graph(4, [(1, 3), (1, 2), (1, 4)])
    m = QueryMeter()
    assert degree_query(G, 1, m) == 3
    assert [indexed_neighbor(G, 1, i, m) for i in (1, 2, 3)] == [2, 3, 4]
    with pytest.raises(IndexOutOfRange):
        indexed_neighbor(G, 1, 4, m)
    assert m.degree_count == 1 and m.indexed_neighbor_count == 4


def test_make_rng_streams_are_reproducible_and_distinct():
    a = [make_rng(7, 3).random() for _ in range(2)]
    assert a[0] == a[1]
    assert make_rng(7, 3).random() != make_rng(7, 4).random()
    assert make_rng(7).random() == make_rng("7").random()


def test_meter_snapshot_is_a_copy():
    m = QueryMeter()
    s = m.snapshot()
    m.random_vertex_count += 1
    assert s.total == 0 and m.total == 1
