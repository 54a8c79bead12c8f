import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import connected_graphs
from planartest.errors import InvalidOrder
from planartest.instances import named_pattern
from planartest.match.graphs import all_graphs
from planartest.pipeline import pattern_at, shrink_pattern, shrink_steps


def final_partition_ok(H, order, Ms):
    Mh = Ms[-1]
    labels = [e.label for e in Mh.edges]
    return (
        Mh.vertices == {order[-1]}
        and all(e.is_selfloop for e in Mh.edges)
        and set().union(*labels) == set(order[:-1])
        and sum(map(len, labels)) == len(order) - 1
    )


@pytest.mark.parametrize("h", range(1, 6))
def test_all_connected_patterns_all_orders(h):
    for H in (G for G in all_graphs(h) if G.is_connected()):
        for order in itertools.permutations(range(1, h + 1)):
            Ms = shrink_pattern(H, order)
            assert len(Ms) == h
            for M in Ms:
                assert M.violations(H) == [], (H.edges, order, M.i)
            if h > 1:
                assert final_partition_ok(H, order, Ms)


@given(connected_graphs(min_n=6, max_n=8), st.randoms(use_true_random=False))
def test_larger_patterns_random_orders(H, r):
    order = list(range(1, H.n + 1))
    r.shuffle(order)
    Ms = shrink_pattern(H, order)
    assert all(M.violations(H) == [] for M in Ms)
    assert final_partition_ok(H, order, Ms)


def test_triangle_trace():
    H = named_pattern("triangle")
    M1, M2, M3 = shrink_pattern(H, (1, 2, 3))
    assert {(tuple(sorted(e.vertices)), tuple(sorted(e.label))) for e in M2.edges} == {((2, 3), ()), ((2, 3), (1,))}
    assert [(e.vertices, e.label) for e in M3.edges] == [({3}, {1, 2})]
    assert M3.modeled_by[4] == (2, 3)


def test_path_trace_creates_selfloop_early():
    H = named_pattern("path3")
    _, M2, M3 = shrink_pattern(H, (1, 2, 3))
    assert {(tuple(sorted(e.vertices)), tuple(sorted(e.label))) for e in M2.edges} == {((2, 3), ()), ((2,), (1,))}
    assert [(e.vertices, e.label) for e in M3.edges] == [({3}, {1, 2})]


def test_prefix_and_pattern_at():
    H = named_pattern("c4")
    assert len(shrink_steps(H, (2,))) == 2
    assert pattern_at(H, (2, 1)).i == 3
    assert pattern_at(H, ()).hypergraph.edges == shrink_pattern(H, (1, 2, 3, 4))[0].hypergraph.edges


@pytest.mark.parametrize("order", [(1, 2), (1, 1, 2, 3), (0, 1, 2), (1, 2, 3, 5)])
def test_bad_orders(order):
    with pytest.raises(InvalidOrder):
        shrink_pattern(named_pattern("c4"), order)


def test_disconnected_pattern_rejected():
    with pytest.raises(InvalidOrder):
        shrink_pattern(named_pattern("2k2"), (1, 3, 2, 4))
