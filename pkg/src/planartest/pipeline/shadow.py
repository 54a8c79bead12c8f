"""Shadow graphs: simple graphs reproducing the adjacency of Q_i through edge contractions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from planartest.core import Edge, build_graph, norm_edge
from planartest.errors import ContractionEdgeMissing, SizeLimit
from planartest.match.packing import CopySet
from planartest.match.planarity import PLANARITY_CAP, euler_ok, is_planar_small, planar_edge_cap
from planartest.pipeline.contract import ContractedHypergraph, build_Q


@dataclass(frozen=True)
class ColorShadow:
    """GG^c for one surviving color ``c``."""

    color: int
    vertices: frozenset[int]
    edges: frozenset[Edge]

    @property
    def euler_margin(self) -> int:
        """Planar edge cap minus |E|; negative means the bound fails."""
        return planar_edge_cap(len(self.vertices)) - len(self.edges)

    def euler_ok(self) -> bool:
        return euler_ok(len(self.vertices), len(self.edges))

    def is_planar(self, cap: int = PLANARITY_CAP) -> bool | None:
        """Minor-based planarity when the graph is small enough, else None."""
        vs = sorted(self.vertices)
        if len(vs) > cap:
            return None
        idx = {v: i + 1 for i, v in enumerate(vs)}
        g = build_graph(len(vs), [(idx[a], idx[b]) for a, b in self.edges])
        try:
            return is_planar_small(g, cap)
        except SizeLimit:
            return None


@dataclass(frozen=True)
class ShadowGraph:
    """Per-color shadows, their union, and the union filtered to Q_i adjacencies.

    ``missing`` lists Q_i-adjacent pairs absent from the union; it is empty
    whenever the construction is sound.
    """

    per_color: tuple[ColorShadow, ...]
    union: frozenset[Edge]
    edges: frozenset[Edge]
    missing: frozenset[Edge]

    def neighbors(self, u: int) -> frozenset[int]:
        return frozenset(b if a == u else a for a, b in self.edges if u in (a, b))

    @property
    def vertices(self) -> frozenset[int]:
        out: set[int] = set()
        for a, b in self.edges:
            out.add(a)
            out.add(b)
        return frozenset(out)


def _color_shadow(
    D: CopySet,
    prefix: tuple[int, ...],
    stages: Sequence[ContractedHypergraph],
    fr: int,
) -> ColorShadow:
    col = D.coloring
    adj: dict[int, set[int]] = {}
    for a, b in D.edges():
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    pos = {c: j for j, c in enumerate(prefix)}
    for j in range(2, len(prefix) + 2):
        v = prefix[j - 2]
        Qprev = stages[j - 2]
        for u in sorted(Qprev.vertices):
            if col[u] != v or u not in adj:
                continue
            gamma = Qprev.neighbors(u)
            fixed = [x for x in gamma if col[x] in pos]
            if fixed:
                w = min(fixed, key=lambda x: (pos[col[x]], x))
            else:
                same = sorted(x for x in gamma if col[x] == fr)
                w = same[0] if same else None
            nb = adj.pop(u)
            for x in nb:
                adj[x].discard(u)
            if w is None:
                continue
            if w not in nb:
                raise ContractionEdgeMissing(
                    f"color {fr}: contracting {u} into {w} at step {j} but ({u},{w}) is not an edge"
                )
            for x in nb:
                if x != w:
                    adj[x].add(w)
                    adj[w].add(x)
    edges = frozenset(norm_edge(a, b) for a, nbs in adj.items() for b in nbs if a < b)
    return ColorShadow(fr, frozenset(adj), edges)


def shadow(Q: ContractedHypergraph, D: CopySet, prefix: Sequence[int]) -> ShadowGraph:
    """Shadow graph of Q_i(D) for ``i = len(prefix) + 1``.

    For each surviving color the construction of Q_i is replayed on G[D] with
    every contraction of ``u`` realized as contracting an edge ``(u, w)``:
    ``w`` is the neighbor of lowest already-contracted color, else the
    neighbor of the current color, else ``u`` is deleted.
    """
    prefix = tuple(prefix)
    h = D.H.n
    stages = [build_Q(D, prefix[: j - 1], check=False) for j in range(1, len(prefix) + 1)]
    free = [c for c in range(1, h + 1) if c not in prefix]
    per = tuple(_color_shadow(D, prefix, stages, fr) for fr in free)
    union = frozenset().union(*(s.edges for s in per)) if per else frozenset()
    qpairs = Q.adjacent_pairs()
    kept = frozenset(e for e in union if e in qpairs)
    missing = frozenset(e for e in qpairs if e not in union)
    return ShadowGraph(per, union, kept, missing)
