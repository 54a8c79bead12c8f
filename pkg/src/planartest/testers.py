"""One-sided-error testers for H-freeness and family-freeness, plus oracle-sensitivity experiments."""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from planartest.core import (
    EXHAUSTED,
    DistinctNeighborOracle,
    Graph,
    QueryMeter,
    random_neighbor,
    random_vertex,
)
from planartest.explore import ExploredSubgraph, rlbfs, traverse_query_bound
from planartest.match.embed import CopyEmbedding, find_copy_in_edges
from planartest.match.packing import as_fraction


class Decision(enum.Enum):
    ACCEPT = "accept"
    REJECT = "reject"


@dataclass(frozen=True)
class TesterParams:
    """Repetitions ``f``, depth ``ld`` and breadth ``dg`` of the tester."""

    __test__ = False

    f: int
    ld: int
    dg: int

    def __post_init__(self) -> None:
        if min(self.f, self.ld, self.dg) < 1:
            raise ValueError("f, ld and dg must all be >= 1")

    def rlbd_bound(self) -> int:
        """Queries of one rlbd call: a root draw plus at most 2*dg^ld neighbor queries.

        The geometric bound needs dg >= 2; at dg = 1 the exact count ld is used.
        """
        return 1 + max(2 * self.dg**self.ld, traverse_query_bound(self.dg, self.ld))

    def rbe_bound(self) -> int:
        return self.f * self.rlbd_bound()


def default_schedule(eps: float | Fraction, H: Graph) -> TesterParams:
    """dg = max(h^2, ceil(4h/eps)), ld = 2h, f = ceil(32/eps)."""
    e = as_fraction(eps)
    if not 0 < e < 1:
        raise ValueError("eps must lie in (0, 1)")
    h = max(H.n, 1)
    return TesterParams(f=math.ceil(32 / e), ld=2 * h, dg=max(h * h, math.ceil(4 * h / e)))


@dataclass(frozen=True)
class TestVerdict:
    """Outcome of a tester run.

    A reject always carries evidence: ``witness`` for a connected pattern,
    ``component_witnesses`` for a disconnected one.
    """

    __test__ = False

    decision: Decision
    witness: CopyEmbedding | None
    queries: QueryMeter
    pattern: Graph | None = None
    component_witnesses: tuple[CopyEmbedding | None, ...] = ()
    overlap: bool = False
    calls: int = 0
    explored: ExploredSubgraph | None = field(default=None, repr=False)

    @property
    def reject(self) -> bool:
        return self.decision is Decision.REJECT


@lru_cache(maxsize=256)
def _has_cycle(H: Graph) -> bool:
    return H.m > H.n - len(H.components())


def rlbd(
    G: Graph, H: Graph, dg: int, ld: int, meter: QueryMeter, rng: random.Random
) -> TestVerdict:
    """One rlbfs run; reject iff the explored edges contain a copy of ``H``."""
    ex = rlbfs(G, dg, ld, meter, rng)
    es = ex.edge_set
    # an explored subgraph is connected, so |E| = |V| - 1 means it is a tree
    if not es or (_has_cycle(H) and len(es) == len(ex.vertices) - 1):
        w = None
    else:
        w = find_copy_in_edges(es, H)
    d = Decision.REJECT if w is not None else Decision.ACCEPT
    return TestVerdict(d, w, meter.snapshot(), H, calls=1, explored=ex)


def rbe(
    G: Graph,
    H: Graph,
    eps: float | Fraction,
    params: TesterParams | None,
    rng: random.Random,
    meter: QueryMeter | None = None,
) -> TestVerdict:
    """Up to ``f`` independent rlbd calls; reject on the first copy found."""
    p = params or default_schedule(eps, H)
    meter = meter if meter is not None else QueryMeter()
    for t in range(1, p.f + 1):
        v = rlbd(G, H, p.dg, p.ld, meter, rng)
        if v.reject:
            return TestVerdict(Decision.REJECT, v.witness, meter.snapshot(), H, calls=t, explored=v.explored)
    return TestVerdict(Decision.ACCEPT, None, meter.snapshot(), H, calls=p.f)


@lru_cache(maxsize=256)
def pattern_components(H: Graph) -> tuple[tuple[Graph, tuple[int, ...]], ...]:
    """Connected components of ``H`` as standalone graphs plus their original vertex ids."""
    return tuple((H.induced(comp), tuple(comp)) for comp in H.components())


def _single_vertex_witness(G: Graph, meter: QueryMeter, rng: random.Random) -> CopyEmbedding:
    v = random_vertex(G, meter, rng)
    return CopyEmbedding((v,), frozenset())


def test_disconnected(
    G: Graph,
    H: Graph,
    eps: float | Fraction,
    params: TesterParams | None,
    rng: random.Random,
    meter: QueryMeter | None = None,
) -> TestVerdict:
    """Search each component of ``H`` with its own batch of rlbd calls; reject iff all are found.

    A one-vertex component is found by sampling any vertex. Witnesses of
    different components may overlap; ``overlap`` reports it.
    """
    comps = pattern_components(H)
    if len(comps) == 1:
        return rbe(G, H, eps, params, rng, meter)
    meter = meter if meter is not None else QueryMeter()
    found: list[CopyEmbedding | None] = []
    calls = 0
    for Hc, _ in comps:
        if Hc.n == 1:
            found.append(_single_vertex_witness(G, meter, rng) if G.n >= 1 else None)
            continue
        p = params or default_schedule(eps, Hc)
        w = None
        for _ in range(p.f):
            calls += 1
            v = rlbd(G, Hc, p.dg, p.ld, meter, rng)
            if v.reject:
                w = v.witness
                break
        found.append(w)
        if w is None:
            break
    while len(found) < len(comps):
        found.append(None)
    all_found = all(w is not None for w in found)
    overlap = False
    witness = None
    if all_found:
        vsets = [w.vertex_set for w in found]  # type: ignore[union-attr]
        overlap = any(vsets[a] & vsets[b] for a in range(len(vsets)) for b in range(a + 1, len(vsets)))
        if not overlap:
            vm = [0] * H.n
            for (_, ids), w in zip(comps, found):
                for local, orig in enumerate(ids, start=1):
                    vm[orig - 1] = w.vertex_map[local - 1]  # type: ignore[union-attr]
            witness = CopyEmbedding.from_map(H, vm)
    d = Decision.REJECT if all_found else Decision.ACCEPT
    return TestVerdict(d, witness, meter.snapshot(), H, tuple(found), overlap, calls)


def family_test(
    G: Graph,
    family: Sequence[Graph],
    eps: float | Fraction,
    params: TesterParams | None,
    rng: random.Random,
    meter: QueryMeter | None = None,
) -> TestVerdict:
    """Test every member at proximity eps/|family| and reject iff some member test rejects."""
    meter = meter if meter is not None else QueryMeter()
    if not family:
        return TestVerdict(Decision.ACCEPT, None, meter.snapshot())
    # the proximity only matters when the default schedule is used
    e = as_fraction(eps) / len(family) if params is None else eps
    calls = 0
    for H in family:
        v = test_disconnected(G, H, e, params, rng, meter)
        calls += v.calls
        if v.reject:
            return TestVerdict(
                Decision.REJECT, v.witness, meter.snapshot(), H, v.component_witnesses, v.overlap, calls, v.explored
            )
    return TestVerdict(Decision.ACCEPT, None, meter.snapshot(), None, calls=calls)


@dataclass(frozen=True)
class ConnectivityVerdict:
    decision: Decision
    component: tuple[int, ...]
    queries: QueryMeter

    @property
    def reject(self) -> bool:
        return self.decision is Decision.REJECT


def connectivity_test_distinct(
    G: Graph, eps: float | Fraction, rng: random.Random, meter: QueryMeter | None = None
) -> ConnectivityVerdict:
    """Sample ceil(3/eps) vertices and explore each by distinct-neighbor BFS, stopping once
    more than 2/eps vertices are seen. Reject iff some exploration closes off a whole
    component smaller than the graph.
    """
    e = as_fraction(eps)
    if not 0 < e < 1:
        raise ValueError("eps must lie in (0, 1)")
    meter = meter if meter is not None else QueryMeter()
    oracle = DistinctNeighborOracle(G, meter, rng)
    # the oracle never repeats an answer, so answers are cached for later explorations
    known: dict[int, list[int]] = {}
    done: set[int] = set()

    def neighbors_of(u: int):
        yield from list(known.get(u, ()))
        while u not in done:
            x = oracle.query(u)
            if x is EXHAUSTED:
                done.add(u)
                return
            known.setdefault(u, []).append(x)
            yield x

    size_cap = math.floor(2 / e)
    for _ in range(math.ceil(3 / e)):
        s = random_vertex(G, meter, rng)
        seen = {s}
        queue = [s]
        closed = True
        while queue and closed:
            u = queue.pop()
            for x in neighbors_of(u):
                if x not in seen:
                    seen.add(x)
                    queue.append(x)
                    if len(seen) > size_cap:
                        closed = False
                        break
        if closed and len(seen) < G.n:
            return ConnectivityVerdict(Decision.REJECT, tuple(sorted(seen)), meter.snapshot())
    return ConnectivityVerdict(Decision.ACCEPT, (), meter.snapshot())


@dataclass(frozen=True)
class MatchingFrequency:
    """How often a q-query random walk on C_n looks like a perfect matching."""

    q: int
    n: int
    trials: int
    hits: int

    @property
    def frequency(self) -> float:
        return self.hits / self.trials

    @property
    def sigma(self) -> float:
        p = max(self.frequency, 2.0**-self.q)
        return math.sqrt(p * (1 - p) / self.trials)

    @property
    def bound(self) -> float:
        return 2.0**-self.q

    @property
    def ok(self) -> bool:
        return self.frequency >= self.bound - 4 * self.sigma


def matching_transcript(G: Graph, q: int, meter: QueryMeter, rng: random.Random) -> list[tuple[int, int]]:
    """Random start, then each of ``q`` random-neighbor queries is made from the last vertex returned."""
    v = random_vertex(G, meter, rng)
    seen = []
    for _ in range(q):
        x = random_neighbor(G, v, meter, rng)
        seen.append((v, x))
        v = x
    return seen


def looks_like_matching(edges: Sequence[tuple[int, int]]) -> bool:
    deg: dict[int, set[int]] = {}
    for a, b in edges:
        deg.setdefault(a, set()).add(b)
        deg.setdefault(b, set()).add(a)
    return all(len(s) <= 1 for s in deg.values())


def matching_indistinguishability(q: int, n: int, trials: int, rng: random.Random) -> MatchingFrequency:
    """Frequency with which the transcript on C_n has maximum degree at most 1.

    Trial ``t`` draws from its own generator seeded by the ``t``-th output of
    ``rng``, so runs with the same ``rng`` state and different ``q`` share
    random numbers and the frequency is nonincreasing in ``q``.
    """
    if q < 1 or n < 4 or n % 2 or trials < 1:
        raise ValueError("need q >= 1, even n >= 4 and trials >= 1")
    from planartest.instances import cycle

    C = cycle(n)
    hits = 0
    for _ in range(trials):
        sub = random.Random(rng.getrandbits(64))
        if looks_like_matching(matching_transcript(C, q, QueryMeter(), sub)):
            hits += 1
    return MatchingFrequency(q, n, trials, hits)


__all__ = [
    "ConnectivityVerdict",
    "Decision",
    "MatchingFrequency",
    "TestVerdict",
    "TesterParams",
    "connectivity_test_distinct",
    "default_schedule",
    "family_test",
    "matching_indistinguishability",
    "pattern_components",
    "rbe",
    "rlbd",
    "test_disconnected",
    "traverse_query_bound",
]
