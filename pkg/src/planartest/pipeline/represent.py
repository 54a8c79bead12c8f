"""Representative functions P_1..P_h mapping contracted vertices to surviving proxies."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from planartest.errors import InvalidOrder
from planartest.match.packing import CopySet
from planartest.pipeline.contract import ContractedHypergraph, build_Q


@dataclass(frozen=True)
class RepresentativeFunctions:
    """``maps[i - 1][u]`` is P_i(u); index 0 of each map is unused."""

    order: tuple[int, ...]
    maps: tuple[tuple[int, ...], ...]

    def P(self, i: int) -> tuple[int, ...]:
        return self.maps[i - 1]

    def preimage_sizes(self, i: int) -> dict[int, int]:
        out: dict[int, int] = {}
        for u in range(1, len(self.maps[i - 1])):
            x = self.maps[i - 1][u]
            out[x] = out.get(x, 0) + 1
        return out

    def violations(self, stages: Sequence[ContractedHypergraph]) -> list[str]:
        """Invariant failures against Q_1..Q_h (``stages[i - 1]`` is Q_i)."""
        probs = []
        n = len(self.maps[0]) - 1
        if any(self.maps[0][u] != u for u in range(1, n + 1)):
            probs.append("P_1 is not the identity")
        D = stages[0].copies
        touched = {x for c in D.copies for x in c.vertex_map}
        for i, Q in enumerate(stages, start=1):
            P = self.maps[i - 1]
            for u in range(1, n + 1):
                x = P[u]
                if u not in touched:
                    if x != u:
                        probs.append(f"isolated vertex {u} moves at level {i}")
                elif u in Q.vertices:
                    if x != u:
                        probs.append(f"surviving vertex {u} moves at level {i}")
                else:
                    if x not in Q.vertices:
                        probs.append(f"P_{i}({u}) = {x} is not a vertex of Q_{i}")
                    elif not any(u in e.label for e in Q.incident(x)):
                        probs.append(f"no hyperedge at P_{i}({u}) = {x} carries {u} in its label")
        return probs


def representatives(D: CopySet, order: Sequence[int]) -> RepresentativeFunctions:
    """Recursive construction: a vertex whose proxy gets contracted moves to that proxy's
    neighbor of lowest color (earliest position in ``order``).
    """
    order = tuple(order)
    H = D.H
    if sorted(order) != list(range(1, H.n + 1)):
        raise InvalidOrder(f"order {order} is not a permutation of 1..{H.n}")
    col = D.coloring
    n = col.n
    pos = {c: j for j, c in enumerate(order)}
    touched = {x for c in D.copies for x in c.vertex_map}
    cur = list(range(n + 1))
    maps = [tuple(cur)]
    for i in range(2, H.n + 1):
        Qprev = build_Q(D, order[: i - 2], check=True)
        gone = set(order[: i - 1])
        vprev = order[i - 2]
        nxt = list(cur)
        for u in range(1, n + 1):
            if u not in touched or col[u] not in gone:
                nxt[u] = u
                continue
            p = cur[u]
            if col[p] != vprev:
                nxt[u] = p
                continue
            nb = Qprev.neighbors(p)
            nxt[u] = min(nb, key=lambda x: (pos[col[x]], x))
        cur = nxt
        maps.append(tuple(cur))
    return RepresentativeFunctions(order, tuple(maps))


def stages_for(D: CopySet, order: Sequence[int]) -> list[ContractedHypergraph]:
    """Q_1(D)..Q_h(D) for a full order."""
    order = tuple(order)
    return [build_Q(D, order[: i - 1], check=True) for i in range(1, len(order) + 1)]
