"""Bounded-breadth bounded-depth exploration, rooted isomorphism and the canonical tester."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Collection, Sequence

from planartest.core import Edge, Graph, QueryMeter, build_graph, norm_edge, random_vertex
from planartest.errors import SizeLimit

ISOMORPHISM_CAP = 64


@dataclass(frozen=True)
class ExploredSubgraph:
    """Levels L_0..L_ld and the traversed edges.

    ``choices`` maps each expanded vertex to its ``dg`` drawn adjacency
    positions (0-based), so the run can be replayed exactly.
    """

    root: int
    levels: tuple[frozenset[int], ...]
    edge_set: frozenset[Edge]
    choices: tuple[tuple[int, tuple[int, ...]], ...] = field(default=(), repr=False)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset().union(*self.levels)

    def violations(self, dg: int, ld: int) -> list[str]:
        probs = []
        for a in range(len(self.levels)):
            for b in range(a + 1, len(self.levels)):
                if self.levels[a] & self.levels[b]:
                    probs.append(f"levels {a} and {b} intersect")
        level_of = {v: i for i, L in enumerate(self.levels) for v in L}
        for u, v in self.edge_set:
            lu, lv = level_of.get(u), level_of.get(v)
            if lu is None or lv is None:
                probs.append(f"edge {(u, v)} has an endpoint outside the levels")
        vbound = sum(dg**i for i in range(ld + 1))
        ebound = sum(dg**i for i in range(1, ld + 1))
        if len(self.vertices) > vbound:
            probs.append(f"{len(self.vertices)} vertices exceed {vbound}")
        if len(self.edge_set) > ebound:
            probs.append(f"{len(self.edge_set)} edges exceed {ebound}")
        return probs


def traverse_query_bound(dg: int, ld: int) -> int:
    """Most random-neighbor queries one traverse can make."""
    return sum(dg**i for i in range(1, ld + 1))


def traverse(
    G: Graph,
    v: int,
    dg: int,
    ld: int,
    meter: QueryMeter,
    rng: random.Random,
    record: bool = False,
) -> ExploredSubgraph:
    """Each frontier vertex, in increasing id order, makes ``dg`` random-neighbor
    queries; new vertices form the next level and every drawn edge is kept.

    An isolated start returns no edges and makes no queries.
    """
    if dg < 1 or ld < 1:
        raise ValueError("dg and ld must be >= 1")
    levels = [frozenset({v})]
    edges: set[Edge] = set()
    choices: list[tuple[int, tuple[int, ...]]] = []
    if not G.adj[v]:
        return ExploredSubgraph(v, (levels[0],) + (frozenset(),) * ld, frozenset())
    seen = {v}
    adj = G.adj
    draw = rng.randrange
    for _ in range(ld):
        nxt: set[int] = set()
        frontier = sorted(levels[-1])
        meter.random_neighbor_count += dg * len(frontier)
        for u in frontier:
            nb = adj[u]
            d = len(nb)
            picks = [draw(d) for _ in range(dg)]
            for i in picks:
                x = nb[i]
                nxt.add(x)
                edges.add((u, x) if u < x else (x, u))
            if record:
                choices.append((u, tuple(picks)))
        nxt -= seen
        seen |= nxt
        levels.append(frozenset(nxt))
    return ExploredSubgraph(v, tuple(levels), frozenset(edges), tuple(choices))


def replay_traverse(G: Graph, v: int, dg: int, ld: int, choices: Sequence[tuple[int, Sequence[int]]]) -> ExploredSubgraph:
    """Re-run traverse with recorded draws instead of randomness."""
    it = iter(choices)
    levels = [frozenset({v})]
    edges: set[Edge] = set()
    if not G.adj[v]:
        return ExploredSubgraph(v, (levels[0],) + (frozenset(),) * ld, frozenset())
    seen = {v}
    for _ in range(ld):
        nxt: set[int] = set()
        for u in sorted(levels[-1]):
            cu, picks = next(it)
            if cu != u or len(picks) != dg:
                raise ValueError(f"recorded choice for {cu} does not match frontier vertex {u}")
            for i in picks:
                x = G.adj[u][i]
                nxt.add(x)
                edges.add(norm_edge(u, x))
        nxt -= seen
        seen |= nxt
        levels.append(frozenset(nxt))
    return ExploredSubgraph(v, tuple(levels), frozenset(edges), tuple(choices))


def rlbfs(
    G: Graph, dg: int, ld: int, meter: QueryMeter, rng: random.Random, record: bool = False
) -> ExploredSubgraph:
    """Traverse from a uniformly random root."""
    v = random_vertex(G, meter, rng)
    return traverse(G, v, dg, ld, meter, rng, record)


@dataclass(frozen=True)
class RootedGraph:
    """Graph with distinguished root vertices."""

    graph: Graph
    roots: frozenset[int]

    def __post_init__(self) -> None:
        if any(not 1 <= r <= self.graph.n for r in self.roots):
            raise ValueError("roots must be vertices of the graph")


def rooted_union(discs: Collection[ExploredSubgraph]) -> RootedGraph:
    """Union of explored discs on its own vertex set, roots = the disc roots."""
    verts: set[int] = set()
    edges: set[Edge] = set()
    roots: set[int] = set()
    for d in discs:
        roots.add(d.root)
        verts.add(d.root)
        edges |= d.edge_set
        for a, b in d.edge_set:
            verts.add(a)
            verts.add(b)
    order = sorted(verts)
    idx = {v: i + 1 for i, v in enumerate(order)}
    g = build_graph(len(order), [(idx[a], idx[b]) for a, b in edges])
    return RootedGraph(g, frozenset(idx[r] for r in roots))


def root_preserving_isomorphic(Q1: RootedGraph, Q2: RootedGraph, cap: int = ISOMORPHISM_CAP) -> bool:
    """True iff a bijection maps roots onto roots and preserves adjacency both ways."""
    g1, g2 = Q1.graph, Q2.graph
    if max(g1.n, g2.n) > cap:
        raise SizeLimit(f"rooted isomorphism capped at {cap} vertices")
    if g1.n != g2.n or g1.m != g2.m or len(Q1.roots) != len(Q2.roots):
        return False

    def key(g: Graph, roots: frozenset[int], v: int) -> tuple[bool, int]:
        return (v in roots, g.degree(v))

    if sorted(key(g1, Q1.roots, v) for v in g1.vertices()) != sorted(
        key(g2, Q2.roots, v) for v in g2.vertices()
    ):
        return False
    order = sorted(g1.vertices(), key=lambda v: (not (v in Q1.roots), -g1.degree(v), v))
    a1, a2 = g1.adjsets, g2.adjsets
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        kv = key(g1, Q1.roots, v)
        for w in g2.vertices():
            if w in used or key(g2, Q2.roots, w) != kv:
                continue
            ok = True
            for x, y in mapping.items():
                if (x in a1[v]) != (y in a2[w]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used.add(w)
                if rec(i + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    return rec(0)


@dataclass(frozen=True)
class CanonicalOutcome:
    reject: bool
    union: RootedGraph
    matched: int | None
    queries: QueryMeter


def canonical_tester(
    G: Graph,
    qprime: int,
    forbidden: Sequence[RootedGraph],
    meter: QueryMeter,
    rng: random.Random,
) -> CanonicalOutcome:
    """Sample ``qprime`` roots, explore a (q', q')-disc from each, and reject iff
    the rooted union is root-preservingly isomorphic to a forbidden member.
    """
    if qprime < 1:
        raise ValueError("qprime must be >= 1")
    discs = []
    for _ in range(qprime):
        v = random_vertex(G, meter, rng)
        discs.append(traverse(G, v, qprime, qprime, meter, rng))
    U = rooted_union(discs)
    for idx, F in enumerate(forbidden):
        if root_preserving_isomorphic(U, F):
            return CanonicalOutcome(True, U, idx, meter.snapshot())
    return CanonicalOutcome(False, U, None, meter.snapshot())
