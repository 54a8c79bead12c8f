"""Shrinking a pattern graph into the labeled hypergraphs M_1..M_h."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from planartest.core import Graph
from planartest.errors import InvalidOrder
from planartest.pipeline.hypergraph import LabeledHyperedge, LabeledHypergraph


@dataclass(frozen=True)
class ShrunkPattern:
    """M_i: the pattern after contracting ``order[:i-1]``.

    ``modeled_by[e]`` lists the ids of M_{i-1} hyperedges that edge ``e`` of
    M_i models (itself when carried over unchanged).
    """

    i: int
    order: tuple[int, ...]
    hypergraph: LabeledHypergraph
    modeled_by: dict[int, tuple[int, ...]]

    @property
    def edges(self) -> tuple[LabeledHyperedge, ...]:
        return self.hypergraph.edges

    @property
    def vertices(self) -> frozenset[int]:
        return self.hypergraph.vertices

    def violations(self, H: Graph) -> list[str]:
        """Invariant failures of this M_i; empty when it is well formed."""
        probs = []
        h = H.n
        contracted = set(self.order[: self.i - 1])
        if len(self.vertices) != h - self.i + 1:
            probs.append(f"M_{self.i} has {len(self.vertices)} vertices, expected {h - self.i + 1}")
        if self.vertices & contracted:
            probs.append("a contracted vertex is still present")
        seen: set[int] = set()
        for e in self.edges:
            if not e.vertices:
                probs.append(f"edge {e.id} is empty")
            if not e.vertices <= self.vertices:
                probs.append(f"edge {e.id} leaves the vertex set")
            if e.label & seen:
                probs.append(f"edge {e.id} label overlaps an earlier label")
            seen |= e.label
            if not e.label <= contracted:
                probs.append(f"edge {e.id} label is not contracted vertices")
            if e.colored_label != e.label:
                probs.append(f"edge {e.id} colored label differs from label")
            if not e.label and not e.is_regular:
                probs.append(f"edge {e.id} has an empty label but is not an edge of H")
            for x in e.label:
                if not set(H.adj[x]) <= e.vertices | e.label:
                    probs.append(f"label vertex {x} of edge {e.id} has a neighbor outside e and lab(e)")
        if seen != contracted:
            probs.append("labels do not cover the contracted vertices")
        if self.i == h:
            if any(not e.is_selfloop for e in self.edges):
                probs.append("final pattern has a non-selfloop edge")
            if h > 1 and not self.edges:
                probs.append("final pattern has no selfloops")
        return probs


def _check_order(H: Graph, order: Sequence[int], full: bool) -> tuple[int, ...]:
    o = tuple(order)
    if len(set(o)) != len(o) or any(not 1 <= a <= H.n for a in o):
        raise InvalidOrder(f"order {o} is not a sequence of distinct vertices of H")
    if full and len(o) != H.n:
        raise InvalidOrder(f"order {o} is not a permutation of 1..{H.n}")
    return o


def initial_pattern(H: Graph) -> LabeledHypergraph:
    edges = tuple(
        LabeledHyperedge(k, frozenset(e)) for k, e in enumerate(H.sorted_edges())
    )
    return LabeledHypergraph(frozenset(H.vertices()), edges, 1, ())


def shrink_steps(H: Graph, prefix: Sequence[int]) -> list[ShrunkPattern]:
    """M_1..M_{len(prefix)+1} for a partial order ``prefix``.

    Contracting ``v`` removes it and its incident hyperedges and adds one
    hyperedge on its other neighbors labeled by ``v`` and the incident labels.
    Raises InvalidOrder when some contraction before the last vertex leaves
    nothing to attach to, which happens exactly when H is disconnected.
    """
    o = _check_order(H, prefix, full=False)
    cur = initial_pattern(H)
    out = [ShrunkPattern(1, o, cur, {e.id: (e.id,) for e in cur.edges})]
    next_id = H.m
    for step, v in enumerate(o, start=1):
        if step == H.n:
            break
        inc = cur.incident(v)
        nbrs: set[int] = set()
        lab: set[int] = {v}
        for e in inc:
            nbrs |= e.vertices
            lab |= e.label
        nbrs.discard(v)
        if not nbrs:
            raise InvalidOrder(
                f"contracting {v} at step {step} leaves an empty hyperedge; H must be connected"
            )
        inc_ids = {e.id for e in inc}
        new = LabeledHyperedge(next_id, frozenset(nbrs), frozenset(lab), frozenset(lab))
        next_id += 1
        kept = tuple(e for e in cur.edges if e.id not in inc_ids)
        cur = LabeledHypergraph(cur.vertices - {v}, kept + (new,), step + 1, o[:step])
        modeled = {e.id: (e.id,) for e in kept}
        modeled[new.id] = tuple(sorted(inc_ids))
        out.append(ShrunkPattern(step + 1, o, cur, modeled))
    return out


def shrink_pattern(H: Graph, order: Sequence[int]) -> list[ShrunkPattern]:
    """M_1..M_h for a full vertex order of ``H``."""
    o = _check_order(H, order, full=True)
    return shrink_steps(H, o)


def pattern_at(H: Graph, prefix: Sequence[int]) -> ShrunkPattern:
    """M_i with ``i = len(prefix) + 1``."""
    return shrink_steps(H, prefix)[-1]
