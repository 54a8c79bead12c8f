"""Edge-disjoint packings, random colorings, exact deletion distance, farness certificates."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from planartest.core import Coloring, Edge, Graph
from planartest.errors import SizeLimit
from planartest.match.embed import (
    CopyEmbedding,
    automorphisms,
    colored_form,
    enumerate_copies,
)

DISTANCE_EDGE_CAP = 40
BEST_COLORING_TRIAL_CAP = 100_000


@dataclass(frozen=True)
class CopySet:
    """Pairwise edge-disjoint copies of ``H``; colored when ``coloring`` is set."""

    H: Graph
    copies: tuple[CopyEmbedding, ...]
    coloring: Coloring | None = None

    def __len__(self) -> int:
        return len(self.copies)

    def __iter__(self) -> Iterator[CopyEmbedding]:
        return iter(self.copies)

    def __getitem__(self, i: int) -> CopyEmbedding:
        return self.copies[i]

    def subset(self, indices: Sequence[int]) -> "CopySet":
        return CopySet(self.H, tuple(self.copies[i] for i in indices), self.coloring)

    def edges(self) -> set[Edge]:
        out: set[Edge] = set()
        for c in self.copies:
            out |= c.edge_image
        return out

    def union_graph(self, n: int) -> Graph:
        """``G[D]``: the graph on ``1..n`` formed by all copy edges."""
        from planartest.core import build_graph

        return build_graph(n, self.edges())

    def violations(self, G: Graph) -> list[str]:
        """Invariant failures; empty when the set is a valid (colored) packing."""
        probs = []
        seen: set[Edge] = set()
        for i, c in enumerate(self.copies):
            if not c.is_valid_in(G, self.H):
                probs.append(f"copy {i} is not an embedding")
            if seen & c.edge_image:
                probs.append(f"copy {i} shares an edge with an earlier copy")
            seen |= c.edge_image
            if self.coloring is not None:
                if not c.is_colored(self.coloring):
                    probs.append(f"copy {i} is not colored")
                if self.coloring.monochromatic_edges(c.edge_image):
                    probs.append(f"copy {i} has a monochromatic edge")
        return probs


def _disjoint_greedy(copies: Sequence[CopyEmbedding]) -> list[CopyEmbedding]:
    used: set[Edge] = set()
    out = []
    for c in copies:
        if used.isdisjoint(c.edge_image):
            out.append(c)
            used |= c.edge_image
    return out


def greedy_packing(
    G: Graph,
    H: Graph,
    coloring: Coloring | None = None,
    rng: random.Random | None = None,
) -> CopySet:
    """Maximal edge-disjoint set of (colored) copies, scanned in enumeration order.

    With ``rng`` the scan order is shuffled first; the result is still maximal.
    """
    copies = enumerate_copies(G, H, coloring=coloring)
    if rng is not None:
        rng.shuffle(copies)
    return CopySet(H, tuple(_disjoint_greedy(copies)), coloring)


def max_packing_size(G: Graph, H: Graph) -> int:
    """Exact maximum number of edge-disjoint copies (exhaustive; tiny inputs only)."""
    copies = [c.edge_image for c in enumerate_copies(G, H)]
    best = 0

    def rec(i: int, used: frozenset[Edge], k: int) -> None:
        nonlocal best
        if k + (len(copies) - i) <= best:
            return
        if i == len(copies):
            best = max(best, k)
            return
        if used.isdisjoint(copies[i]):
            rec(i + 1, used | copies[i], k + 1)
        rec(i + 1, used, k)

    rec(0, frozenset(), 0)
    return best


def survival_probability(H: Graph, adjusted: bool = True) -> Fraction:
    """Chance that one fixed copy becomes colored under a uniform ``h``-coloring.

    The raw value ``1/h^h`` counts a single target pattern; the adjusted value
    ``|Aut(H)|/h^h`` counts every automorphic relabelling that also works.
    """
    h = H.n
    num = len(automorphisms(H)) if adjusted else 1
    return Fraction(num, h**h)


def default_coloring_trials(H: Graph) -> int:
    return min(64 * H.n**H.n, BEST_COLORING_TRIAL_CAP)


def random_coloring(n: int, h: int, rng: random.Random) -> Coloring:
    return Coloring((0,) + tuple(rng.randrange(h) + 1 for _ in range(n)))


@lru_cache(maxsize=256)
def _colorings_by_automorphism(H: Graph) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Color tuple of a copy's vertices -> the automorphism that makes it colored.

    A copy with map ``vm`` is colored through ``sigma`` iff
    ``col[vm[sigma(a) - 1]] = a`` for all ``a``, i.e. its color tuple is ``sigma^-1``.
    The first automorphism in enumeration order wins, matching :func:`colored_form`.
    """
    out: dict[tuple[int, ...], tuple[int, ...]] = {}
    for sigma in automorphisms(H):
        inv = [0] * H.n
        for a in range(1, H.n + 1):
            inv[sigma[a - 1] - 1] = a
        out.setdefault(tuple(inv), sigma)
    return out


def colored_survivors(packing: CopySet, coloring: Coloring) -> list[CopyEmbedding]:
    """Copies of ``packing`` that admit a colored embedding under ``coloring``."""
    H = packing.H
    table = _colorings_by_automorphism(H)
    cols = coloring.colors
    out = []
    for c in packing.copies:
        vm = c.vertex_map
        sigma = table.get(tuple(cols[x] for x in vm))
        if sigma is not None:
            out.append(CopyEmbedding.from_map(H, tuple(vm[sigma[a - 1] - 1] for a in range(1, H.n + 1))))
    return out


@dataclass(frozen=True)
class BestColoring:
    coloring: Coloring
    copies: CopySet
    packing: CopySet
    counts: tuple[int, ...] = field(repr=False)

    def __iter__(self):
        yield self.coloring
        yield self.copies


def best_coloring(
    G: Graph,
    H: Graph,
    trials: int | None = None,
    rng: random.Random | None = None,
    packing: CopySet | None = None,
) -> BestColoring:
    """Sample uniform colorings and keep the one preserving most packed copies.

    A fixed uncolored greedy packing is computed once (or passed in); each trial
    counts its copies that become colored. Ties keep the earliest trial.
    """
    rng = rng or random.Random(0)
    if trials is None:
        trials = default_coloring_trials(H)
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if packing is None:
        packing = greedy_packing(G, H)
    best_col: Coloring | None = None
    best_copies: list[CopyEmbedding] = []
    counts = []
    for _ in range(trials):
        col = random_coloring(G.n, H.n, rng)
        surv = colored_survivors(packing, col)
        counts.append(len(surv))
        if best_col is None or len(surv) > len(best_copies):
            best_col, best_copies = col, surv
    assert best_col is not None
    return BestColoring(
        best_col, CopySet(H, tuple(best_copies), best_col), packing, tuple(counts)
    )


def _popcount(x: int) -> int:
    return bin(x).count("1")


def min_hitting_set(masks: Sequence[int]) -> int:
    """Smallest number of bits meeting every mask (branch and bound)."""
    masks = sorted(set(masks), key=_popcount)
    if not masks:
        return 0
    if any(m == 0 for m in masks):
        raise ValueError("empty mask cannot be hit")

    def packing_bound(live: list[int]) -> int:
        used = 0
        k = 0
        for m in live:
            if not m & used:
                used |= m
                k += 1
        return k

    # upper bound: take every bit of a maximal disjoint packing
    used = 0
    for m in masks:
        if not m & used:
            used |= m
    best = _popcount(used)

    def rec(deleted: int, cnt: int) -> None:
        nonlocal best
        live = [m for m in masks if not m & deleted]
        if not live:
            best = min(best, cnt)
            return
        if cnt + packing_bound(live) >= best:
            return
        pivot = live[0]
        freq: dict[int, int] = {}
        b = pivot
        while b:
            low = b & -b
            freq[low] = sum(1 for m in live if m & low)
            b ^= low
        for bit in sorted(freq, key=lambda x: -freq[x]):
            rec(deleted | bit, cnt + 1)

    rec(0, 0)
    return best


def exact_deletion_distance(G: Graph, H: Graph, cap: int = DISTANCE_EDGE_CAP) -> int:
    """Minimum number of edge deletions that make ``G`` free of ``H``."""
    if G.m > cap:
        raise SizeLimit(f"graph has {G.m} edges, exact distance cap is {cap}")
    index = {e: i for i, e in enumerate(G.sorted_edges())}
    masks = []
    for c in enumerate_copies(G, H):
        m = 0
        for e in c.edge_image:
            m |= 1 << index[e]
        masks.append(m)
    return min_hitting_set(masks)


def as_fraction(eps: float | Fraction) -> Fraction:
    """Exact rational view of a proximity parameter (floats snapped to the nearest small fraction)."""
    if isinstance(eps, Fraction):
        return eps
    return _snap(eps)


@lru_cache(maxsize=1024)
def _snap(eps: float) -> Fraction:
    return Fraction(eps).limit_denominator(10**9)


@dataclass(frozen=True)
class FarnessCertificate:
    packing_size: int
    n: int
    exact_distance: int | None = None

    @property
    def bound(self) -> Fraction:
        """The graph is eps-far from H-free for every eps below this value."""
        return Fraction(self.packing_size, self.n)


class _NotCertified:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "NOT_CERTIFIED"

    def __bool__(self) -> bool:
        return False


NOT_CERTIFIED = _NotCertified()


def certify_far(
    G: Graph,
    H: Graph,
    eps: float | Fraction,
    exact: bool = False,
) -> FarnessCertificate | _NotCertified:
    """Certify eps-farness from H-freeness when a greedy packing has more than eps*n copies.

    Failure to certify is not evidence of closeness: a maximal packing can be
    smaller than a maximum one.
    """
    k = len(greedy_packing(G, H))
    if not k > as_fraction(eps) * G.n:
        return NOT_CERTIFIED
    dist = exact_deletion_distance(G, H) if exact else None
    return FarnessCertificate(k, G.n, dist)
