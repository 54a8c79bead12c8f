"""Exhaustive check that a property agrees with a forbidden-subgraph family on small graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import floor
from typing import Callable, Collection

from planartest.core import Graph, build_graph
from planartest.errors import SizeLimit
from planartest.match.embed import contains_copy
from planartest.match.graphs import ENUMERATION_CAP, all_graphs
from planartest.match.packing import as_fraction

Predicate = Callable[[Graph], bool]


@dataclass(frozen=True)
class AuditReport:
    """Graphs breaking either direction of the family/property agreement.

    ``satisfying_with_copy``: satisfies P yet contains a family member.
    ``far_without_copy``: needs more than eps*n edits to satisfy P yet is family-free.
    """

    n: int
    eps: Fraction
    graphs_checked: int
    satisfying_with_copy: tuple[Graph, ...] = field(default=())
    far_without_copy: tuple[Graph, ...] = field(default=())

    @property
    def holds(self) -> bool:
        return not self.satisfying_with_copy and not self.far_without_copy

    @property
    def violations(self) -> tuple[Graph, ...]:
        return self.satisfying_with_copy + self.far_without_copy


def _contains_member(G: Graph, family: Collection[Graph]) -> bool:
    return any(H.n <= G.n and contains_copy(G, H) for H in family)


def within_distance(G: Graph, P: Predicate, budget: int, deletions_only: bool = False) -> bool:
    """True when at most ``budget`` edge edits turn ``G`` into a graph satisfying ``P``."""
    pool = G.sorted_edges() if deletions_only else list(combinations(G.vertices(), 2))
    current = set(G.edges)
    for r in range(0, budget + 1):
        for flips in combinations(pool, r):
            es = current.symmetric_difference(flips)
            if P(build_graph(G.n, es)):
                return True
    return False


def semi_subgraph_freeness_audit(
    P: Predicate,
    family: Collection[Graph],
    n: int,
    eps: float | Fraction,
    deletions_only: bool = False,
) -> AuditReport:
    """Check on every graph with ``n`` vertices (up to isomorphism) that

    (i) graphs satisfying ``P`` contain no member of ``family``, and
    (ii) graphs more than ``eps * n`` edits away from ``P`` contain some member.
    """
    if n > ENUMERATION_CAP:
        raise SizeLimit(f"audit enumerates all graphs; n is capped at {ENUMERATION_CAP}")
    e = as_fraction(eps)
    budget = floor(e * n)
    bad_i: list[Graph] = []
    bad_ii: list[Graph] = []
    graphs = all_graphs(n)
    for G in graphs:
        has = _contains_member(G, family)
        if P(G):
            if has:
                bad_i.append(G)
        elif not has and not within_distance(G, P, budget, deletions_only):
            bad_ii.append(G)
    return AuditReport(n, e, len(graphs), tuple(bad_i), tuple(bad_ii))
