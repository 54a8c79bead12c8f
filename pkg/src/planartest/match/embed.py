"""Backtracking subgraph embedding (non-induced), plain and colored."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Collection, Iterator, Mapping, Sequence

from planartest.core import Coloring, Edge, Graph, norm_edge
from planartest.errors import SizeLimit

MAX_PATTERN = 10


@dataclass(frozen=True)
class CopyEmbedding:
    """Injective map ``V(H) -> V(G)``; ``vertex_map[a - 1]`` is the image of ``a``."""

    vertex_map: tuple[int, ...]
    edge_image: frozenset[Edge]

    @classmethod
    def from_map(cls, H: Graph, vertex_map: Sequence[int]) -> "CopyEmbedding":
        vm = tuple(vertex_map)
        img = frozenset(norm_edge(vm[a - 1], vm[b - 1]) for a, b in H.edges)
        return cls(vm, img)

    def image(self, a: int) -> int:
        return self.vertex_map[a - 1]

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertex_map)

    def is_valid_in(self, G: Graph, H: Graph) -> bool:
        vm = self.vertex_map
        if len(vm) != H.n or len(set(vm)) != H.n:
            return False
        if any(not 1 <= x <= G.n for x in vm):
            return False
        expect = {norm_edge(vm[a - 1], vm[b - 1]) for a, b in H.edges}
        return expect == set(self.edge_image) and all(G.has_edge(u, v) for u, v in expect)

    def is_colored(self, coloring: Coloring) -> bool:
        """True when every pattern vertex ``a`` lands on a vertex of color ``a``."""
        return all(coloring[x] == a for a, x in enumerate(self.vertex_map, start=1))


@lru_cache(maxsize=256)
def search_plan(H: Graph) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Vertex order for backtracking and, per position, earlier adjacent positions.

    Greedy: highest degree first, then the vertex with most already-placed
    neighbors, so candidate sets are neighbor intersections as early as possible.
    """
    remaining = set(H.vertices())
    order: list[int] = []
    placed: set[int] = set()
    while remaining:
        best = max(
            remaining,
            key=lambda a: (sum(1 for x in H.adj[a] if x in placed), H.degree(a), -a),
        )
        order.append(best)
        placed.add(best)
        remaining.discard(best)
    pos = {a: i for i, a in enumerate(order)}
    back = tuple(
        tuple(sorted(pos[x] for x in H.adj[a] if pos[x] < pos[a])) for a in order
    )
    return tuple(order), back


def iter_embeddings(
    nbrs: Mapping[int, Collection[int]] | Sequence[Collection[int]],
    vertices: Sequence[int],
    H: Graph,
    colors: Coloring | Mapping[int, int] | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield every injective edge-preserving map of ``H`` into the target.

    ``nbrs[v]`` must support ``in`` and ``len``; ``vertices`` lists target
    vertices. With ``colors`` set, pattern vertex ``a`` may only map to vertices
    of color ``a``.
    """
    h = H.n
    if h == 0:
        yield ()
        return
    order, back = search_plan(H)
    hdeg = [H.degree(a) for a in order]
    assign = [0] * h
    used: set[int] = set()

    def candidates(i: int):
        a = order[i]
        if back[i]:
            anchor = nbrs[assign[back[i][0]]]
            pool = anchor
        else:
            pool = vertices
        need = hdeg[i]
        for x in pool:
            if x in used or len(nbrs[x]) < need:
                continue
            if colors is not None and colors[x] != a:
                continue
            ok = True
            for j in back[i][1:]:
                if x not in nbrs[assign[j]]:
                    ok = False
                    break
            if ok:
                yield x

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == h:
            out = [0] * h
            for k, a in enumerate(order):
                out[a - 1] = assign[k]
            yield tuple(out)
            return
        for x in candidates(i):
            assign[i] = x
            used.add(x)
            yield from rec(i + 1)
            used.discard(x)

    yield from rec(0)


def _check_pattern(H: Graph) -> None:
    if H.n > MAX_PATTERN:
        raise SizeLimit(f"pattern has {H.n} vertices, cap is {MAX_PATTERN}")


def enumerate_copies(
    G: Graph,
    H: Graph,
    limit: int | None = None,
    coloring: Coloring | None = None,
) -> list[CopyEmbedding]:
    """Copies of ``H`` in ``G``, one per (vertex set, edge set) pair.

    Two embeddings differing by an automorphism of ``H`` have the same image
    and are reported once. Stops after ``limit`` copies.
    """
    _check_pattern(H)
    out: list[CopyEmbedding] = []
    seen: set[tuple[frozenset[int], frozenset[Edge]]] = set()
    for vm in iter_embeddings(G.adjsets, range(1, G.n + 1), H, coloring):
        emb = CopyEmbedding.from_map(H, vm)
        key = (emb.vertex_set, emb.edge_image)
        if key in seen:
            continue
        seen.add(key)
        out.append(emb)
        if limit is not None and len(out) >= limit:
            break
    return out


def contains_copy(G: Graph, H: Graph, coloring: Coloring | None = None) -> bool:
    return bool(enumerate_copies(G, H, limit=1, coloring=coloring))


def find_copy_in_edges(
    edges: Collection[Edge], H: Graph
) -> CopyEmbedding | None:
    """First copy of ``H`` inside the graph formed by ``edges`` (vertices untouched by edges are absent)."""
    if len(edges) < H.m:
        return None
    nbrs: dict[int, set[int]] = {}
    for u, v in edges:
        nbrs.setdefault(u, set()).add(v)
        nbrs.setdefault(v, set()).add(u)
    if len(nbrs) < H.n - sum(1 for a in H.vertices() if not H.adj[a]):
        return None
    # the k-th largest degree of a host must dominate that of any subgraph
    hd = sorted((d for d in H.degrees() if d), reverse=True)
    gd = sorted((len(x) for x in nbrs.values()), reverse=True)
    if any(a > b for a, b in zip(hd, gd)):
        return None
    for vm in iter_embeddings(nbrs, sorted(nbrs), H):
        return CopyEmbedding.from_map(H, vm)
    return None


@lru_cache(maxsize=256)
def automorphisms(H: Graph) -> tuple[tuple[int, ...], ...]:
    """All automorphisms of ``H`` as tuples ``sigma`` with ``sigma[a - 1]`` the image of ``a``."""
    _check_pattern(H)
    return tuple(iter_embeddings(H.adjsets, range(1, H.n + 1), H))


def colored_form(
    emb: CopyEmbedding, H: Graph, coloring: Coloring
) -> CopyEmbedding | None:
    """Re-express ``emb`` as a colored embedding of the same image, if one exists."""
    vm = emb.vertex_map
    for sigma in automorphisms(H):
        cand = tuple(vm[sigma[a - 1] - 1] for a in range(1, H.n + 1))
        if all(coloring[cand[a - 1]] == a for a in range(1, H.n + 1)):
            return CopyEmbedding.from_map(H, cand)
    return None
