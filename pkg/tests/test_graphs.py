import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs, to_nx
from planartest.instances import relabel
from planartest.match.graphs import all_graphs, are_isomorphic, graph_certificate

# OEIS A000088: graphs on n unlabeled vertices
COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}


@pytest.mark.parametrize("n, count", sorted(COUNTS.items()))
def test_enumeration_counts(n, count):
    gs = all_graphs(n)
    assert len(gs) == count
    assert len({graph_certificate(G) for G in gs}) == count


@given(graphs(max_n=8), st.integers(0, 10**6))
def test_certificate_is_invariant_under_relabelling(G, seed):
    assert graph_certificate(G) == graph_certificate(relabel(G, random.Random(seed)))


@given(graphs(max_n=6), graphs(max_n=6))
def test_isomorphism_matches_networkx(A, B):
    assert are_isomorphic(A, B) == (A.n == B.n and nx.is_isomorphic(to_nx(A), to_nx(B)))
