"""Bounded exploration of labeled hypergraphs and colored pattern detection."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from planartest.core import Coloring, QueryMeter
from planartest.errors import EmptyGraph
from planartest.pipeline.hypergraph import LabeledHyperedge, LabeledHypergraph
from planartest.pipeline.shrink import ShrunkPattern


@dataclass(frozen=True)
class HExplored:
    """Outcome of one hypergraph exploration.

    ``start`` is the sampled vertex of G and ``root`` its representative.
    ``expanded`` is False when the root is not a vertex of the hypergraph.
    """

    start: int
    root: int
    expanded: bool
    levels: tuple[frozenset[int], ...]
    edges: tuple[LabeledHyperedge, ...]

    @property
    def edge_ids(self) -> frozenset[int]:
        return frozenset(e.id for e in self.edges)


def hrlbfs(
    Q: LabeledHypergraph,
    P: Sequence[int],
    dg: int,
    ld: int,
    n: int,
    meter: QueryMeter,
    rng: random.Random,
) -> HExplored:
    """Sample ``v`` uniformly from 1..n, start at ``P[v]`` and expand like Traverse.

    Each frontier vertex draws ``dg`` incident hyperedges uniformly with
    replacement; the next level is every vertex of the drawn hyperedges not
    already seen.
    """
    if n < 1:
        raise EmptyGraph("cannot sample a start vertex from an empty vertex set")
    if dg < 1 or ld < 1:
        raise ValueError("dg and ld must be >= 1")
    meter.random_vertex_count += 1
    v = rng.randrange(n) + 1
    root = P[v]
    levels = [frozenset({root})]
    if root not in Q.vertices:
        return HExplored(v, root, False, tuple(levels), ())
    seen = {root}
    picked: dict[int, LabeledHyperedge] = {}
    for _ in range(ld):
        nxt: set[int] = set()
        for u in sorted(levels[-1]):
            inc = Q.incident(u)
            if not inc:
                continue
            for _ in range(dg):
                meter.random_neighbor_count += 1
                e = inc[rng.randrange(len(inc))]
                picked.setdefault(e.id, e)
                nxt |= e.vertices
        nxt -= seen
        seen |= nxt
        levels.append(frozenset(nxt))
    edges = tuple(sorted(picked.values(), key=LabeledHyperedge.sort_key))
    return HExplored(v, root, True, tuple(levels), edges)


def find_colored_pattern(
    edges: Sequence[LabeledHyperedge], M: ShrunkPattern, coloring: Coloring
) -> dict[int, int] | None:
    """Vertices ``x_a`` (one per vertex ``a`` of M, colored ``a``) such that every
    hyperedge of M has an explored hyperedge on the mapped vertices with the same
    colored label. Returns ``{a: x_a}`` or None.
    """
    index: set[tuple[frozenset[int], frozenset[int]]] = set()
    by_color: dict[int, set[int]] = {}
    for e in edges:
        index.add((e.vertices, e.colored_label))
        for x in e.vertices:
            by_color.setdefault(coloring[x], set()).add(x)
    verts = sorted(M.vertices)
    if any(a not in by_color for a in verts):
        return None
    medges = list(M.edges)
    order = sorted(verts, key=lambda a: len(by_color[a]))
    pos = {a: i for i, a in enumerate(order)}
    due: list[list] = [[] for _ in order]
    for e in medges:
        last = max(pos[a] for a in e.vertices)
        due[last].append(e)
    assign: dict[int, int] = {}

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        a = order[i]
        for x in sorted(by_color[a]):
            assign[a] = x
            if all(
                (frozenset(assign[b] for b in e.vertices), e.colored_label) in index for e in due[i]
            ) and rec(i + 1):
                return True
        del assign[a]
        return False

    return dict(assign) if rec(0) else None


@dataclass(frozen=True)
class HVerdict:
    reject: bool
    witness: dict[int, int] | None
    explored: HExplored
    queries: QueryMeter


def hrlbd(
    Q: LabeledHypergraph,
    P: Sequence[int],
    M: ShrunkPattern,
    dg: int,
    ld: int,
    meter: QueryMeter,
    rng: random.Random,
    coloring: Coloring | None = None,
    n: int | None = None,
) -> HVerdict:
    """Run hrlbfs once and reject iff the explored hyperedges hold a colored copy of M."""
    if coloring is None:
        coloring = Q.copies.coloring  # type: ignore[attr-defined]
    if n is None:
        n = coloring.n
    ex = hrlbfs(Q, P, dg, ld, n, meter, rng)
    w = find_colored_pattern(ex.edges, M, coloring) if ex.edges else None
    return HVerdict(w is not None, w, ex, meter.snapshot())
