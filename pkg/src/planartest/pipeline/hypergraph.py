"""Labeled hypergraphs shared by the shrunk patterns and the contracted copy hypergraphs."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable


@dataclass(frozen=True)
class LabeledHyperedge:
    """Hyperedge with a label of contracted vertices and the colors of that label.

    ``copy`` indexes the copy of the pattern this edge came from and ``source``
    is the id of the pattern hyperedge it corresponds to; both are ``None`` for
    pattern hyperedges themselves.
    """

    id: int
    vertices: frozenset[int]
    label: frozenset[int] = frozenset()
    colored_label: frozenset[int] = frozenset()
    copy: int | None = None
    source: int | None = None

    @property
    def is_selfloop(self) -> bool:
        return len(self.vertices) == 1

    @property
    def is_regular(self) -> bool:
        return len(self.vertices) == 2 and not self.label

    def sort_key(self) -> tuple:
        return (tuple(sorted(self.vertices)), tuple(sorted(self.label)), self.id)

    def shape(self) -> tuple:
        """Identity ignoring the id: vertices, label, colored label, provenance."""
        return (
            tuple(sorted(self.vertices)),
            tuple(sorted(self.label)),
            tuple(sorted(self.colored_label)),
            self.copy,
            self.source,
        )


@dataclass(frozen=True)
class LabeledHypergraph:
    """Multiset of labeled hyperedges over a vertex set.

    Degree counts incident hyperedges with multiplicity; a selfloop contributes 1.
    """

    vertices: frozenset[int]
    edges: tuple[LabeledHyperedge, ...]
    index: int = 1
    order: tuple[int, ...] = field(default=())

    @cached_property
    def incidence(self) -> dict[int, tuple[LabeledHyperedge, ...]]:
        inc: dict[int, list[LabeledHyperedge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            for v in e.vertices:
                inc.setdefault(v, []).append(e)
        return {v: tuple(sorted(es, key=LabeledHyperedge.sort_key)) for v, es in inc.items()}

    @cached_property
    def by_id(self) -> dict[int, LabeledHyperedge]:
        return {e.id: e for e in self.edges}

    def incident(self, u: int) -> tuple[LabeledHyperedge, ...]:
        return self.incidence.get(u, ())

    def degree(self, u: int) -> int:
        return len(self.incident(u))

    def neighbors(self, u: int) -> frozenset[int]:
        out: set[int] = set()
        for e in self.incident(u):
            out |= e.vertices
        out.discard(u)
        return frozenset(out)

    def has_selfloop(self, u: int) -> bool:
        return any(e.is_selfloop for e in self.incident(u))

    def distinct_neighbor_count(self, u: int) -> int:
        """Neighbors other than ``u`` plus one when a selfloop sits at ``u``."""
        return len(self.neighbors(u)) + (1 if self.has_selfloop(u) else 0)

    def non_isolated(self) -> list[int]:
        return sorted(v for v in self.vertices if self.incident(v))

    def restrict_copies(self, keep: Iterable[int]) -> "LabeledHypergraph":
        ks = set(keep)
        return LabeledHypergraph(
            self.vertices, tuple(e for e in self.edges if e.copy in ks), self.index, self.order
        )

    def shape_multiset(self) -> Counter:
        return Counter(e.shape() for e in self.edges)

    def adjacent_pairs(self) -> set[tuple[int, int]]:
        """Unordered pairs of distinct vertices sharing a hyperedge."""
        out: set[tuple[int, int]] = set()
        for e in self.edges:
            vs = sorted(e.vertices)
            for a in range(len(vs)):
                for b in range(a + 1, len(vs)):
                    out.add((vs[a], vs[b]))
        return out
