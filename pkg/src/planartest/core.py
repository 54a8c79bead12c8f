"""Graph and coloring data model plus the oracle access models.

Vertices are the integers ``1..n``. ``Graph.adj[v]`` is the sorted tuple of
neighbors of ``v``; ``adj[0]`` is an unused empty slot so indexing stays
1-based without arithmetic.

Every oracle call goes through a :class:`QueryMeter` so testers can be checked
against their analytic query bounds.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from planartest.errors import (
    EmptyGraph,
    IndexOutOfRange,
    IsolatedVertex,
    OutOfRange,
    SelfLoop,
)

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``1..n``."""

    n: int
    edges: frozenset[Edge]
    adj: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjsets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(x) for x in self.adj)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(self.adj[v]) for v in self.vertices())

    def non_isolated(self) -> list[int]:
        return [v for v in self.vertices() if self.adj[v]]

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by minimum."""
        seen = [False] * (self.n + 1)
        out = []
        for s in self.vertices():
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [s], [s]
            while stack:
                u = stack.pop()
                for x in self.adj[u]:
                    if not seen[x]:
                        seen[x] = True
                        comp.append(x)
                        stack.append(x)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def induced(self, keep: Sequence[int]) -> "Graph":
        """Subgraph induced by ``keep``, relabelled to 1..len(keep) in the given order."""
        index = {v: i + 1 for i, v in enumerate(keep)}
        es = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return build_graph(len(keep), es)


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph, collapsing duplicate pairs.

    Raises OutOfRange for endpoints outside 1..n and SelfLoop for u == v.
    """
    if n < 0:
        raise OutOfRange(f"negative vertex count {n}")
    es: set[Edge] = set()
    for pair in edge_list:
        u, v = int(pair[0]), int(pair[1])
        if not (1 <= u <= n and 1 <= v <= n):
            raise OutOfRange(f"edge ({u},{v}) outside 1..{n}")
        if u == v:
            raise SelfLoop(f"self-loop at {u}")
        es.add(norm_edge(u, v))
    nbrs: list[list[int]] = [[] for _ in range(n + 1)]
    for u, v in es:
        nbrs[u].append(v)
        nbrs[v].append(u)
    adj = tuple(tuple(sorted(x)) for x in nbrs)
    return Graph(n, frozenset(es), adj)


def edge_graph(n: int, edges: Iterable[Edge]) -> Graph:
    """Alias of :func:`build_graph` for already-normalized edges."""
    return build_graph(n, edges)


@dataclass(frozen=True)
class Coloring:
    """Total map from vertices 1..n to colors; ``colors[0]`` is unused."""

    colors: tuple[int, ...]

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[int, int]) -> "Coloring":
        missing = [v for v in range(1, n + 1) if v not in mapping]
        if missing:
            raise ValueError(f"coloring is not total: missing {missing[:5]}")
        return cls((0,) + tuple(mapping[v] for v in range(1, n + 1)))

    @classmethod
    def from_list(cls, values: Sequence[int]) -> "Coloring":
        return cls((0,) + tuple(values))

    @property
    def n(self) -> int:
        return len(self.colors) - 1

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def monochromatic_edges(self, edges: Iterable[Edge]) -> list[Edge]:
        return [(u, v) for u, v in edges if self.colors[u] == self.colors[v]]


class OracleKind(enum.Enum):
    RANDOM_NEIGHBOR = "random_neighbor"
    RANDOM_DISTINCT_NEIGHBOR = "random_distinct_neighbor"
    DEGREE_INDEXED = "degree_indexed"


@dataclass
class QueryMeter:
    """Per-run query counters. Counters only ever increase."""

    random_vertex_count: int = 0
    random_neighbor_count: int = 0
    distinct_neighbor_count: int = 0
    degree_count: int = 0
    indexed_neighbor_count: int = 0

    @property
    def total(self) -> int:
        return (
            self.random_vertex_count
            + self.random_neighbor_count
            + self.distinct_neighbor_count
            + self.degree_count
            + self.indexed_neighbor_count
        )

    def snapshot(self) -> "QueryMeter":
        return QueryMeter(
            self.random_vertex_count,
            self.random_neighbor_count,
            self.distinct_neighbor_count,
            self.degree_count,
            self.indexed_neighbor_count,
        )


def make_rng(seed: int | str, trial: int | None = None) -> random.Random:
    """Seeded generator; ``(seed, trial)`` pairs give independent reproducible streams.

    String seeds are hashed with SHA-512 by :class:`random.Random`, so nearby
    trial indices do not produce correlated streams.
    """
    key = f"{seed}" if trial is None else f"{seed}/{trial}"
    return random.Random(key)


def random_vertex(G: Graph, meter: QueryMeter, rng: random.Random) -> int:
    if G.n < 1:
        raise EmptyGraph("cannot sample a vertex from an empty graph")
    meter.random_vertex_count += 1
    return rng.randrange(G.n) + 1


def random_neighbor(G: Graph, v: int, meter: QueryMeter, rng: random.Random) -> int:
    nb = G.adj[v]
    if not nb:
        raise IsolatedVertex(f"vertex {v} has no neighbors")
    meter.random_neighbor_count += 1
    return nb[rng.randrange(len(nb))]


class Exhausted:
    """Marker returned once every neighbor of a vertex has been revealed."""

    _instance: "Exhausted | None" = None

    def __new__(cls) -> "Exhausted":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "EXHAUSTED"


EXHAUSTED = Exhausted()


class DistinctNeighborOracle:
    """Random distinct-neighbor access: each vertex reveals its neighbors without repeats."""

    def __init__(self, G: Graph, meter: QueryMeter, rng: random.Random):
        self.G = G
        self.meter = meter
        self.rng = rng
        self._remaining: dict[int, list[int]] = {}

    def query(self, v: int) -> int | Exhausted:
        self.meter.distinct_neighbor_count += 1
        rest = self._remaining.get(v)
        if rest is None:
            rest = list(self.G.adj[v])
            self._remaining[v] = rest
        if not rest:
            return EXHAUSTED
        i = self.rng.randrange(len(rest))
        rest[i], rest[-1] = rest[-1], rest[i]
        return rest.pop()


def random_distinct_neighbor(oracle: DistinctNeighborOracle, v: int) -> int | Exhausted:
    return oracle.query(v)


def degree_query(G: Graph, v: int, meter: QueryMeter) -> int:
    meter.degree_count += 1
    return len(G.adj[v])


def indexed_neighbor(G: Graph, v: int, i: int, meter: QueryMeter) -> int:
    """The ``i``-th (1-based) entry of the sorted adjacency of ``v``."""
    meter.indexed_neighbor_count += 1
    nb = G.adj[v]
    if not 1 <= i <= len(nb):
        raise IndexOutOfRange(f"vertex {v} has degree {len(nb)}, asked for neighbor {i}")
    return nb[i - 1]


def degree_and_indexed_neighbor(G: Graph, v: int, i: int, meter: QueryMeter) -> int:
    return indexed_neighbor(G, v, i, meter)
