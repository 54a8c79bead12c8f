import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st
from networkx.algorithms.isomorphism import GraphMatcher

from conftest import connected_graphs, graphs, to_nx
from planartest.core import Coloring, build_graph
from planartest.errors import SizeLimit
from planartest.instances import complete, cycle, grid, named_pattern, triangulation_patch
from planartest.match.embed import (
    CopyEmbedding,
    automorphisms,
    colored_form,
    contains_copy,
    enumerate_copies,
    find_copy_in_edges,
)


def nx_copy_count(G, H):
    """Distinct (vertex set, edge set) images of H in G via networkx monomorphisms."""
    gm = GraphMatcher(to_nx(G), to_nx(H))
    seen = set()
    for m in gm.subgraph_monomorphisms_iter():
        inv = {b: a for a, b in m.items()}
        es = frozenset(frozenset((inv[a], inv[b])) for a, b in H.edges)
        seen.add((frozenset(m), es))
    return len(seen)


@given(graphs(max_n=7), st.sampled_from(["triangle", "path3", "c4", "paw", "star3", "k2"]))
def test_copy_count_matches_networkx(G, name):
    H = named_pattern(name)
    copies = enumerate_copies(G, H)
    assert len(copies) == nx_copy_count(G, H)
    for c in copies:
        assert c.is_valid_in(G, H)


def test_known_counts():
    assert len(enumerate_copies(complete(4), named_pattern("triangle"))) == 4
    assert len(enumerate_copies(complete(4), named_pattern("c4"))) == 3
    assert len(enumerate_copies(grid(3, 3), named_pattern("c4"))) == 4
    assert len(enumerate_copies(cycle(5), named_pattern("path3"))) == 5
    assert len(enumerate_copies(triangulation_patch(2, 2), named_pattern("triangle"))) == 2


def test_limit_and_contains():
    G = complete(5)
    assert len(enumerate_copies(G, named_pattern("triangle"), limit=3)) == 3
    assert contains_copy(G, named_pattern("k4"))
    assert not contains_copy(grid(4, 4), named_pattern("triangle"))


def test_pattern_size_cap():
    with pytest.raises(SizeLimit):
        enumerate_copies(complete(3), complete(11))


@given(connected_graphs(max_n=5))
def test_automorphism_count_matches_networkx(H):
    gm = GraphMatcher(to_nx(H), to_nx(H))
    assert len(automorphisms(H)) == sum(1 for _ in gm.isomorphisms_iter())


def test_colored_enumeration_respects_colors():
    G = complete(4)
    H = named_pattern("triangle")
    col = Coloring.from_list([1, 2, 3, 3])
    copies = enumerate_copies(G, H, coloring=col)
    assert {c.vertex_map for c in copies} == {(1, 2, 3), (1, 2, 4)}
    assert all(c.is_colored(col) for c in copies)


@given(st.integers(0, 10**6))
def test_colored_form_agrees_with_brute_force(seed):
    r = random.Random(seed)
    H = named_pattern(r.choice(["triangle", "paw", "path3", "c4"]))
    G = triangulation_patch(3, 3)
    col = Coloring.from_list([r.randint(1, H.n) for _ in range(G.n)])
    for c in enumerate_copies(G, H):
        cf = colored_form(c, H, col)
        brute = any(
            all(col[c.vertex_map[s[a - 1] - 1]] == a for a in range(1, H.n + 1)) for s in automorphisms(H)
        )
        assert (cf is not None) == brute
        if cf is not None:
            assert cf.is_colored(col) and cf.vertex_set == c.vertex_set and cf.edge_image == c.edge_image


@given(graphs(max_n=7), st.sampled_from(["triangle", "path3", "c4", "2k2"]))
def test_find_copy_in_edges_agrees_with_networkx(G, name):
    H = named_pattern(name)
    w = find_copy_in_edges(G.edges, H)
    assert (w is not None) == (nx_copy_count(G, H) > 0)
    if w is not None:
        assert w.is_valid_in(G, H)


def test_embedding_validity_checks():
    G = build_graph(3, [(1, 2), (2, 3)])
    H = named_pattern("path3")
    assert CopyEmbedding.from_map(H, (1, 2, 3)).is_valid_in(G, H)
    assert not CopyEmbedding.from_map(H, (2, 1, 3)).is_valid_in(G, H)
    assert not CopyEmbedding.from_map(H, (1, 2, 2)).is_valid_in(G, H)
