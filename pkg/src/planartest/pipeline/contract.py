"""Contracted copy hypergraphs Q_i(D), safety and consistency."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from planartest.errors import InvalidOrder, PreconditionViolated, UnsafeContraction
from planartest.match.packing import CopySet
from planartest.pipeline.hypergraph import LabeledHyperedge, LabeledHypergraph
from planartest.pipeline.shrink import ShrunkPattern, shrink_steps


@dataclass(frozen=True)
class ContractedHypergraph(LabeledHypergraph):
    """Q_i(D): union over the copies of D of their per-copy shrinkings.

    ``order`` holds the contracted prefix v_1..v_{i-1}; hyperedge ``copy``
    fields index ``copies``. Labels hold vertices of G; colored labels hold
    the matching vertices of H (each H-vertex is its own color).
    """

    copies: CopySet | None = None
    n: int = 0

    @property
    def coloring(self):
        assert self.copies is not None and self.copies.coloring is not None
        return self.copies.coloring

    @cached_property
    def by_copy(self) -> dict[int, tuple[LabeledHyperedge, ...]]:
        out: dict[int, list[LabeledHyperedge]] = {}
        for e in self.edges:
            out.setdefault(e.copy, []).append(e)
        return {k: tuple(v) for k, v in out.items()}

    def copy_vertices(self, k: int) -> list[int]:
        """Vertices of copy ``k`` still present in Q_i."""
        vm = self.copies.copies[k].vertex_map
        done = set(self.order)
        return [vm[a - 1] for a in range(1, len(vm) + 1) if a not in done]

    @cached_property
    def copies_at(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {}
        for k in range(len(self.copies)):
            for u in self.copy_vertices(k):
                out.setdefault(u, []).append(k)
        return {u: tuple(ks) for u, ks in out.items()}

    def copy_neighbors(self, u: int, k: int) -> frozenset[int]:
        """N^k<u>: neighbors of ``u`` through hyperedges of copy ``k``."""
        out: set[int] = set()
        for e in self.incident(u):
            if e.copy == k:
                out |= e.vertices
        out.discard(u)
        return frozenset(out)

    def restricted(self, keep: Sequence[int]) -> "ContractedHypergraph":
        """Q_i of the sub-collection ``keep`` with copies reindexed in ``keep`` order."""
        remap = {old: new for new, old in enumerate(keep)}
        es = tuple(
            LabeledHyperedge(e.id, e.vertices, e.label, e.colored_label, remap[e.copy], e.source)
            for e in self.edges
            if e.copy in remap
        )
        return ContractedHypergraph(
            self.vertices, es, self.index, self.order, self.copies.subset(list(keep)), self.n
        )


def _require_colored(D: CopySet) -> None:
    if D.coloring is None:
        raise PreconditionViolated("contraction needs colored copies")
    for k, c in enumerate(D.copies):
        if not c.is_colored(D.coloring):
            raise PreconditionViolated(f"copy {k} is not colored")


def _safety_replay(D: CopySet, steps: Sequence[ShrunkPattern], prefix: Sequence[int]) -> None:
    for j, v in enumerate(prefix, start=1):
        nb = steps[j - 1].hypergraph.neighbors(v)
        first: dict[int, tuple[int, frozenset[int]]] = {}
        for k, c in enumerate(D.copies):
            vm = c.vertex_map
            u = vm[v - 1]
            img = frozenset(vm[x - 1] for x in nb)
            if u in first:
                k0, img0 = first[u]
                if img0 != img:
                    raise UnsafeContraction(u, k0, k, j)
            else:
                first[u] = (k, img)


def build_Q(D: CopySet, prefix: Sequence[int], check: bool = True) -> ContractedHypergraph:
    """Q_i(D) for ``i = len(prefix) + 1`` by shrinking every copy independently.

    With ``check`` set, every contraction step j < i is replayed and an
    UnsafeContraction names the first vertex whose copies disagree.
    """
    _require_colored(D)
    H = D.H
    prefix = tuple(prefix)
    steps = shrink_steps(H, prefix)
    if check:
        _safety_replay(D, steps, prefix)
    M = steps[-1]
    edges = []
    eid = 0
    for k, c in enumerate(D.copies):
        vm = c.vertex_map
        for e in M.edges:
            edges.append(
                LabeledHyperedge(
                    eid,
                    frozenset(vm[a - 1] for a in e.vertices),
                    frozenset(vm[a - 1] for a in e.label),
                    e.label,
                    k,
                    e.id,
                )
            )
            eid += 1
    col = D.coloring
    gone = set(prefix)
    V = frozenset(u for u in range(1, col.n + 1) if col[u] not in gone)
    return ContractedHypergraph(V, tuple(edges), len(prefix) + 1, prefix, D, col.n)


def is_safe(u: int, D: CopySet, Q: ContractedHypergraph) -> bool:
    """All copies containing ``u`` see the same neighbor set of ``u`` in ``Q``."""
    if Q.copies is not D and Q.copies != D:
        raise PreconditionViolated("Q was built from a different copy set")
    seen: frozenset[int] | None = None
    for k in Q.copies_at.get(u, ()):
        nb = Q.copy_neighbors(u, k)
        if seen is None:
            seen = nb
        elif nb != seen:
            return False
    return True


def unsafe_vertices(D: CopySet, Q: ContractedHypergraph, color: int) -> list[int]:
    col = D.coloring
    return sorted(u for u in Q.copies_at if col[u] == color and not is_safe(u, D, Q))


def is_consistent(Q: ContractedHypergraph, D: CopySet, prefix: Sequence[int]) -> bool:
    """Q equals the direct construction and each contracted color was safe at its step."""
    prefix = tuple(prefix)
    direct = build_Q(D, prefix, check=False)
    if direct.shape_multiset() != Q.shape_multiset() or direct.vertices != Q.vertices:
        return False
    for j, v in enumerate(prefix, start=1):
        Qj = build_Q(D, prefix[: j - 1], check=False)
        if unsafe_vertices(D, Qj, v):
            return False
    return True


def contract_step(
    Q_prev: ContractedHypergraph, D_next: CopySet, v: int, check: bool = True
) -> ContractedHypergraph:
    """Q_{i+1}(D_next) from Q_i(D_prev) by dropping copies outside D_next and contracting color ``v``.

    ``D_next`` must be a sub-collection of the copies behind ``Q_prev``.
    """
    if v in Q_prev.order:
        raise InvalidOrder(f"color {v} was already contracted")
    old_index = {c.vertex_map: k for k, c in enumerate(Q_prev.copies.copies)}
    keep = []
    for c in D_next.copies:
        if c.vertex_map not in old_index:
            raise PreconditionViolated("D_next is not contained in the copies of Q_prev")
        keep.append(old_index[c.vertex_map])
    Q = Q_prev.restricted(keep)
    if check:
        bad = unsafe_vertices(D_next, Q, v) if len(D_next) else []
        if bad:
            u = bad[0]
            ks = Q.copies_at[u]
            base = Q.copy_neighbors(u, ks[0])
            other = next(k for k in ks if Q.copy_neighbors(u, k) != base)
            raise UnsafeContraction(u, ks[0], other, Q_prev.index)
    H = D_next.H
    new_source = H.m + Q_prev.index - 1
    next_id = max((e.id for e in Q_prev.edges), default=-1) + 1
    edges: list[LabeledHyperedge] = []
    for k, c in enumerate(D_next.copies):
        u = c.vertex_map[v - 1]
        mine = Q.by_copy.get(k, ())
        inc = [e for e in mine if u in e.vertices]
        verts: set[int] = set()
        lab: set[int] = {u}
        clab: set[int] = {v}
        for e in inc:
            verts |= e.vertices
            lab |= e.label
            clab |= e.colored_label
        verts.discard(u)
        if not verts:
            raise InvalidOrder(f"contracting color {v} leaves an empty hyperedge in copy {k}")
        edges.extend(e for e in mine if u not in e.vertices)
        edges.append(
            LabeledHyperedge(next_id, frozenset(verts), frozenset(lab), frozenset(clab), k, new_source)
        )
        next_id += 1
    col = D_next.coloring
    V = frozenset(x for x in Q_prev.vertices if col[x] != v)
    return ContractedHypergraph(
        V, tuple(edges), Q_prev.index + 1, Q_prev.order + (v,), D_next, Q_prev.n
    )
