"""Choosing the next color to contract: degree pruning, AL selection, safe pruning."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from planartest.core import Graph
from planartest.errors import NoLowDegreeVertex, PreconditionViolated
from planartest.match.packing import CopySet
from planartest.pipeline.contract import ContractedHypergraph, build_Q, is_consistent
from planartest.pipeline.shadow import ShadowGraph
from planartest.pipeline.shrink import pattern_at

PRUNE_RETRY_FACTOR = 64


def _indices_of(sub: CopySet, D: CopySet) -> list[int]:
    pos = {c.vertex_map: k for k, c in enumerate(D.copies)}
    return [pos[c.vertex_map] for c in sub.copies]


def distinct_neighbor_count(Q: ContractedHypergraph, u: int, live: set[int] | frozenset[int]) -> int:
    """Distinct neighbors of ``u`` in Q restricted to copies ``live``, a selfloop counting ``u``."""
    nb: set[int] = set()
    loop = False
    for e in Q.incident(u):
        if e.copy in live:
            nb |= e.vertices
            if e.is_selfloop:
                loop = True
    nb.discard(u)
    return len(nb) + (1 if loop else 0)


@dataclass(frozen=True)
class ALResult:
    """Copies kept by AL, with the level structure and per-copy low-degree witness."""

    copies: CopySet
    indices: tuple[int, ...]
    level_vertices: tuple[int, ...]
    levels: dict[int, int]
    witness: dict[int, int]

    def __len__(self) -> int:
        return len(self.indices)


def al_select(D: CopySet, Q: ContractedHypergraph, shadow: ShadowGraph | None = None) -> ALResult:
    """Keep a sub-collection in which every copy has a vertex with at most 6h distinct neighbors.

    Phase 1 repeatedly takes the smallest-id vertex with at most 6h distinct
    neighbors (over the copies still present) and removes every copy through
    it, assigning those copies its level. Phase 2 walks levels downwards,
    keeping level j and dropping earlier-level copies through its vertex when
    the level is at least a 1/(2h) fraction of them.
    """
    h = D.H.n
    cap = 6 * h
    m = len(D)
    live = set(range(m))
    at = Q.copies_at
    counts = {u: distinct_neighbor_count(Q, u, live) for u in at}
    level_of: dict[int, int] = {}
    uj: list[int] = []
    while live:
        pick = None
        for u in sorted(counts):
            if counts[u] <= cap:
                pick = u
                break
        if pick is None:
            raise NoLowDegreeVertex(f"no vertex with at most {cap} distinct neighbors among {len(live)} copies")
        removed = [k for k in at[pick] if k in live]
        lvl = len(uj)
        uj.append(pick)
        touched: set[int] = set()
        for k in removed:
            level_of[k] = lvl
            live.discard(k)
            touched.update(Q.copy_vertices(k))
        for u in touched:
            if any(k in live for k in at[u]):
                counts[u] = distinct_neighbor_count(Q, u, live)
            else:
                counts.pop(u, None)
    keep = set(range(m))
    for j in range(len(uj) - 1, -1, -1):
        A = {k for k in keep if level_of[k] == j}
        B = {k for k in keep if level_of[k] < j and k in at[uj[j]]}
        if 2 * h * len(A) >= len(B):
            keep -= B
        else:
            keep -= A
    idx = tuple(sorted(keep))
    witness = {k: uj[level_of[k]] for k in idx}
    for k, u in witness.items():
        if distinct_neighbor_count(Q, u, keep) > cap:
            raise NoLowDegreeVertex(f"copy {k}: witness {u} exceeds {cap} neighbors after selection")
    if shadow is not None:
        for k in idx:
            for e in Q.by_copy.get(k, ()):
                vs = sorted(e.vertices)
                for a in range(len(vs)):
                    for b in range(a + 1, len(vs)):
                        if (vs[a], vs[b]) not in shadow.edges:
                            raise PreconditionViolated(
                                f"copy {k} uses pair {(vs[a], vs[b])} missing from the shadow"
                            )
    return ALResult(D.subset(idx), idx, tuple(uj), level_of, witness)


@dataclass(frozen=True)
class PruneResult:
    copies: CopySet
    indices: tuple[int, ...]
    attempts: int
    choice: dict[int, frozenset[int]]


def _meets(kept: int, total: int, h: int) -> bool:
    return kept * (6 * h) ** h >= total


def prune_to_safe(D: CopySet, Q: ContractedHypergraph, c: int, rng: random.Random) -> PruneResult:
    """Keep copies whose color-``c`` vertex agrees with one randomly fixed neighbor per color.

    Retries with fresh draws until at least |D|/(6h)^h copies survive.
    """
    H = D.H
    h = H.n
    if c in Q.order:
        raise PreconditionViolated(f"color {c} is already contracted")
    M = pattern_at(H, Q.order)
    ncols = sorted(M.hypergraph.neighbors(c))
    col = D.coloring
    heads = sorted({cp.vertex_map[c - 1] for cp in D.copies})
    live = set(range(len(D)))
    options: dict[int, list[list[int]]] = {}
    for u in heads:
        if distinct_neighbor_count(Q, u, live) > 6 * h:
            raise PreconditionViolated(f"color-{c} vertex {u} has more than {6 * h} distinct neighbors")
        nb = Q.neighbors(u)
        options[u] = [sorted(x for x in nb if col[x] == b) for b in ncols]
    limit = PRUNE_RETRY_FACTOR * (6 * h) ** h
    for attempt in range(1, limit + 1):
        choice = {u: frozenset(rng.choice(opts) for opts in options[u]) for u in heads}
        keep = tuple(
            k
            for k, cp in enumerate(D.copies)
            if Q.copy_neighbors(cp.vertex_map[c - 1], k) == choice[cp.vertex_map[c - 1]]
        )
        if _meets(len(keep), len(D), h):
            return PruneResult(D.subset(keep), keep, attempt, choice)
    raise PreconditionViolated(f"no draw kept |D|/(6h)^h copies within {limit} attempts")


@dataclass(frozen=True)
class SafeSelection:
    color: int
    copies: CopySet
    al: ALResult
    majority: tuple[int, ...]
    prune: PruneResult


def many_safe(
    D: CopySet,
    Q: ContractedHypergraph,
    rng: random.Random,
    shadow: ShadowGraph | None = None,
) -> SafeSelection:
    """AL selection, then the most frequent witness color, then safe pruning on that color."""
    al = al_select(D, Q, shadow)
    col = D.coloring
    tally = Counter(col[u] for u in al.witness.values())
    best = max(tally.values())
    color = min(c for c, t in tally.items() if t == best)
    maj = tuple(k for k in al.indices if col[al.witness[k]] == color)
    Dm = D.subset(maj)
    Qm = Q.restricted(maj)
    pr = prune_to_safe(Dm, Qm, color, rng)
    final = tuple(maj[k] for k in pr.indices)
    return SafeSelection(color, D.subset(final), al, maj, pr)


@dataclass(frozen=True)
class LevelStep:
    vertex: int
    copies: CopySet
    Q: ContractedHypergraph
    selection: SafeSelection
    consistent: bool


def next_level(
    D: CopySet,
    Q: ContractedHypergraph,
    prefix: Sequence[int],
    rng: random.Random,
    shadow: ShadowGraph | None = None,
) -> LevelStep:
    """v_i, D_{i+1} and Q_{i+1}(D_{i+1}) from a consistent Q_i(D_i)."""
    prefix = tuple(prefix)
    sel = many_safe(D, Q, rng, shadow)
    order = prefix + (sel.color,)
    Qn = build_Q(sel.copies, order, check=True)
    ok = is_consistent(Qn, sel.copies, order)
    return LevelStep(sel.color, sel.copies, Qn, sel, ok)


def degree_prune(D: CopySet, G: Graph) -> CopySet:
    """Drop copies through vertices whose degree in G[D'] is at most (alpha/12) deg_G, alpha = |D|/n."""
    alpha = Fraction(len(D), G.n) if G.n else Fraction(0)
    live = list(range(len(D)))
    while True:
        deg: Counter = Counter()
        for k in live:
            for a, b in D.copies[k].edge_image:
                deg[a] += 1
                deg[b] += 1
        low = sorted(v for v, d in deg.items() if d <= alpha / 12 * G.degree(v))
        if not low:
            break
        v = low[0]
        live = [k for k in live if v not in D.copies[k].vertex_set]
    return D.subset(live)
