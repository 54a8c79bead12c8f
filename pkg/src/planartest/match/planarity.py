"""Small-graph planarity by exhaustive K5 / K3,3 minor search.

After deleting vertices of degree at most 1 and suppressing degree-2 vertices
(both preserve planarity), each connected piece with at most ``cap`` vertices
is searched for a minor model. For a connected graph a model can always be
extended to cover every vertex (absorb leftover vertices into an adjacent
branch set), so it suffices to enumerate partitions of the vertex set into
exactly 5 or 6 connected blocks.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from planartest.core import Graph
from planartest.errors import SizeLimit

PLANARITY_CAP = 10


def reduce_low_degree(G: Graph) -> dict[int, set[int]]:
    """Delete degree-<=1 vertices and suppress degree-2 vertices until none remain."""
    nb = {v: set(G.adj[v]) for v in G.vertices()}
    changed = True
    while changed:
        changed = False
        for v in list(nb):
            if v not in nb:
                continue
            d = len(nb[v])
            if d <= 1:
                for x in nb[v]:
                    nb[x].discard(v)
                del nb[v]
                changed = True
            elif d == 2:
                a, b = nb[v]
                nb[a].discard(v)
                nb[b].discard(v)
                nb[a].add(b)
                nb[b].add(a)
                del nb[v]
                changed = True
    return nb


def _components(nb: dict[int, set[int]]) -> list[list[int]]:
    seen: set[int] = set()
    out = []
    for s in sorted(nb):
        if s in seen:
            continue
        seen.add(s)
        comp, stack = [s], [s]
        while stack:
            u = stack.pop()
            for x in nb[u]:
                if x not in seen:
                    seen.add(x)
                    comp.append(x)
                    stack.append(x)
        out.append(sorted(comp))
    return out


def _connected_subsets(
    v: int, allowed: frozenset[int], nb: dict[int, set[int]], max_size: int
) -> Iterator[frozenset[int]]:
    """Every connected vertex set containing ``v`` inside ``allowed``, each exactly once."""

    def grow(S: frozenset[int], ext: set[int], banned: set[int]) -> Iterator[frozenset[int]]:
        yield S
        if len(S) >= max_size:
            return
        ext = set(ext)
        banned = set(banned)
        while ext:
            x = min(ext)
            ext.discard(x)
            new_ext = set(ext)
            for y in nb[x]:
                if y in allowed and y not in S and y not in banned and y != x:
                    new_ext.add(y)
            yield from grow(S | {x}, new_ext, banned)
            banned.add(x)

    start_ext = {y for y in nb[v] if y in allowed}
    yield from grow(frozenset({v}), start_ext, set())


def connected_partitions(
    verts: list[int], nb: dict[int, set[int]], k: int
) -> Iterator[list[frozenset[int]]]:
    """Partitions of ``verts`` into exactly ``k`` blocks, each inducing a connected graph."""

    def rec(remaining: frozenset[int], k: int, blocks: list[frozenset[int]]):
        if k == 0:
            if not remaining:
                yield blocks
            return
        if len(remaining) < k:
            return
        v = min(remaining)
        for block in _connected_subsets(v, remaining, nb, len(remaining) - (k - 1)):
            if k == 1 and len(block) != len(remaining):
                continue
            yield from rec(remaining - block, k - 1, blocks + [block])

    yield from rec(frozenset(verts), k, [])


def _adjacent(nb: dict[int, set[int]], a: frozenset[int], b: frozenset[int]) -> bool:
    return any(nb[x] & b for x in a)


def find_k5_minor(verts: list[int], nb: dict[int, set[int]]) -> list[frozenset[int]] | None:
    if len(verts) < 5:
        return None
    for blocks in connected_partitions(verts, nb, 5):
        if all(_adjacent(nb, a, b) for a, b in combinations(blocks, 2)):
            return blocks
    return None


def find_k33_minor(verts: list[int], nb: dict[int, set[int]]) -> list[frozenset[int]] | None:
    if len(verts) < 6:
        return None
    for blocks in connected_partitions(verts, nb, 6):
        adj = [[_adjacent(nb, a, b) for b in blocks] for a in blocks]
        for side in combinations(range(1, 6), 2):
            left = (0,) + side
            right = [i for i in range(6) if i not in left]
            if all(adj[i][j] for i in left for j in right):
                return blocks
    return None


def is_planar_small(G: Graph, cap: int = PLANARITY_CAP) -> bool:
    """True iff ``G`` has neither a K5 nor a K3,3 minor.

    Raises SizeLimit when a reduced connected piece has more than ``cap`` vertices.
    """
    nb = reduce_low_degree(G)
    for comp in _components(nb):
        v = len(comp)
        if v <= 4:
            continue
        e = sum(len(nb[x]) for x in comp) // 2
        if e > 3 * v - 6:
            return False
        if v > cap:
            raise SizeLimit(f"reduced piece has {v} vertices, minor search cap is {cap}")
        sub = {x: nb[x] for x in comp}
        if e >= 10 and find_k5_minor(comp, sub) is not None:
            return False
        if e >= 9 and find_k33_minor(comp, sub) is not None:
            return False
    return True


def planar_edge_cap(num_vertices: int) -> int:
    """Most edges a simple planar graph on this many vertices can have."""
    if num_vertices < 3:
        return max(0, num_vertices - 1)
    return 3 * num_vertices - 6


def euler_ok(num_vertices: int, num_edges: int) -> bool:
    """Edge-count bound every simple planar graph satisfies."""
    return num_edges <= planar_edge_cap(num_vertices)
