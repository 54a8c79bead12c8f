"""Canonical forms and exhaustive enumeration of small graphs up to isomorphism."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Sequence

from planartest.core import Graph, build_graph
from planartest.errors import SizeLimit

ENUMERATION_CAP = 8


def _refine(nbrs: Sequence[Sequence[int]], colors: list[int]) -> list[int]:
    """Color refinement; labels are ranks of sorted signatures, so the result is canonical."""
    k = len(set(colors))
    while True:
        sig = [(colors[v], tuple(sorted(colors[x] for x in nbrs[v]))) for v in range(len(colors))]
        rank = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [rank[s] for s in sig]
        k_new = len(rank)
        if k_new == k:
            return new
        colors, k = new, k_new


def _twin_cell(nbrs: Sequence[frozenset[int]], cell: list[int]) -> bool:
    for u, v in combinations(cell, 2):
        if nbrs[u] - {v} != nbrs[v] - {u}:
            return False
    return True


def canonical_form(
    n: int, nbrs: Sequence[frozenset[int]], vertex_colors: Sequence[int] | None = None
) -> tuple:
    """Isomorphism-invariant certificate of a (vertex-colored) graph on ``0..n-1``.

    Individualization-refinement search taking the lexicographically smallest
    adjacency string over all leaves. Cells of mutual twins are branched on a
    single representative since every choice gives the same leaf certificates.
    """
    init = list(vertex_colors) if vertex_colors is not None else [0] * n
    best: tuple | None = None

    def leaf(colors: list[int]) -> tuple:
        order = sorted(range(n), key=lambda v: colors[v])
        pos = {v: i for i, v in enumerate(order)}
        bits = tuple(
            sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u in range(n) for v in nbrs[u] if u < v)
        )
        return (tuple(init[v] for v in order), bits)

    def rec(colors: list[int]) -> None:
        nonlocal best
        colors = _refine(nbrs, colors)
        if len(set(colors)) == n:
            cert = leaf(colors)
            if best is None or cert < best:
                best = cert
            return
        counts: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            counts.setdefault(c, []).append(v)
        target = min(c for c, vs in counts.items() if len(vs) > 1)
        cell = counts[target]
        branch = cell[:1] if _twin_cell(nbrs, cell) else cell
        for v in branch:
            nxt = [2 * c for c in colors]
            nxt[v] += 1
            rec(nxt)

    rec(_refine(nbrs, [0] * n) if vertex_colors is None else _rank(init))
    assert best is not None
    return (n, best)


def _rank(values: Sequence[int]) -> list[int]:
    r = {x: i for i, x in enumerate(sorted(set(values)))}
    return [r[x] for x in values]


def graph_certificate(G: Graph) -> tuple:
    nbrs = [frozenset(x - 1 for x in G.adj[v]) for v in G.vertices()]
    return canonical_form(G.n, nbrs)


def are_isomorphic(G1: Graph, G2: Graph) -> bool:
    return G1.n == G2.n and G1.m == G2.m and graph_certificate(G1) == graph_certificate(G2)


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """Every simple graph on ``n`` vertices, one per isomorphism class.

    Built by attaching vertex ``n`` to every neighbor subset of each graph on
    ``n - 1`` vertices and deduplicating by canonical form.
    """
    if n > ENUMERATION_CAP:
        raise SizeLimit(f"graph enumeration capped at n = {ENUMERATION_CAP}")
    if n < 0:
        raise ValueError("n must be >= 0")
    if n <= 1:
        return (build_graph(n, []),)
    out: dict[tuple, Graph] = {}
    for base in all_graphs(n - 1):
        for r in range(n):
            for S in combinations(range(1, n), r):
                G = build_graph(n, list(base.edges) + [(s, n) for s in S])
                cert = graph_certificate(G)
                if cert not in out:
                    out[cert] = G
    return tuple(sorted(out.values(), key=lambda g: (g.m, g.sorted_edges())))
