"""Planar test-instance generators, named patterns and edge-list I/O."""

from __future__ import annotations

import enum
import math
import random
import re
from dataclasses import dataclass
from itertools import combinations

from planartest.core import Graph, build_graph
from planartest.errors import InvalidSpec, OutOfRange, ParseError
from planartest.match.planarity import euler_ok


class InstanceKind(enum.Enum):
    DISJOINT_COPIES = "copies"
    GRID = "grid"
    CYCLE = "cycle"
    MATCHING = "matching"
    TRIANGULATION_PATCH = "tri"
    CLIQUE_ON_SQRT_N = "clique"


@dataclass(frozen=True)
class InstanceSpec:
    """What to generate. Unused parameters are ignored by a kind.

    ``copies``/``pad``: DisjointCopies. ``rows``/``cols``: Grid and
    TriangulationPatch. ``n``: Cycle, Matching and CliqueOnSqrtN.
    ``pattern`` names the copied graph for DisjointCopies when none is passed.
    ``shuffle`` relabels vertices by a random permutation drawn from the rng.
    """

    kind: InstanceKind
    copies: int = 0
    pad: int = 0
    rows: int = 0
    cols: int = 0
    n: int = 0
    pattern: str = ""
    shuffle: bool = False

    def label(self) -> str:
        k = self.kind
        if k is InstanceKind.DISJOINT_COPIES:
            return f"copies:{self.pattern or 'H'}:{self.copies}:{self.pad}"
        if k in (InstanceKind.GRID, InstanceKind.TRIANGULATION_PATCH):
            return f"{k.value}:{self.rows}x{self.cols}"
        return f"{k.value}:{self.n}"


def disjoint_copies(H: Graph, k: int, pad: int = 0) -> Graph:
    if k < 0 or pad < 0:
        raise InvalidSpec("copy count and padding must be nonnegative")
    es = []
    for c in range(k):
        off = c * H.n
        es.extend((u + off, v + off) for u, v in H.edges)
    return build_graph(k * H.n + pad, es)


def grid(rows: int, cols: int) -> Graph:
    if rows < 1 or cols < 1:
        raise InvalidSpec("grid sides must be positive")
    vid = lambda r, c: r * cols + c + 1
    es = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                es.append((vid(r, c), vid(r, c + 1)))
            if r + 1 < rows:
                es.append((vid(r, c), vid(r + 1, c)))
    return build_graph(rows * cols, es)


def triangulation_patch(rows: int, cols: int) -> Graph:
    """Grid with one diagonal per unit square: a patch of the triangular lattice."""
    g = grid(rows, cols)
    vid = lambda r, c: r * cols + c + 1
    es = list(g.edges)
    for r in range(rows - 1):
        for c in range(cols - 1):
            es.append((vid(r, c), vid(r + 1, c + 1)))
    return build_graph(rows * cols, es)


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidSpec("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def matching(n: int) -> Graph:
    if n < 2 or n % 2:
        raise InvalidSpec("a perfect matching needs an even positive vertex count")
    return build_graph(n, [(i, i + 1) for i in range(1, n, 2)])


def clique_on_sqrt_n(n: int) -> Graph:
    """Clique on floor(sqrt(n)) vertices plus isolated padding."""
    if n < 1:
        raise InvalidSpec("n must be positive")
    s = math.isqrt(n)
    return build_graph(n, combinations(range(1, s + 1), 2))


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidSpec("a path needs at least 1 vertex")
    return build_graph(n, [(i, i + 1) for i in range(1, n)])


def complete(n: int) -> Graph:
    return build_graph(n, combinations(range(1, n + 1), 2))


def star(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(1, i) for i in range(2, leaves + 2)])


def relabel(G: Graph, rng: random.Random) -> Graph:
    perm = list(G.vertices())
    rng.shuffle(perm)
    m = {v: perm[v - 1] for v in G.vertices()}
    return build_graph(G.n, [(m[u], m[v]) for u, v in G.edges])


_FIXED_PATTERNS = {
    "k1": lambda: build_graph(1, []),
    "k2": lambda: build_graph(2, [(1, 2)]),
    "triangle": lambda: complete(3),
    "paw": lambda: build_graph(4, [(1, 2), (2, 3), (1, 3), (3, 4)]),
    "diamond": lambda: build_graph(4, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]),
    "2k2": lambda: build_graph(4, [(1, 2), (3, 4)]),
    "k33": lambda: build_graph(6, [(a, b) for a in (1, 2, 3) for b in (4, 5, 6)]),
}


def named_pattern(name: str) -> Graph:
    """Pattern graph by name: triangle, paw, diamond, 2k2, k33, kN, cN, pathN, starN."""
    key = name.strip().lower()
    if key in _FIXED_PATTERNS:
        return _FIXED_PATTERNS[key]()
    m = re.fullmatch(r"(k|c|path|p|star)(\d+)", key)
    if not m:
        raise InvalidSpec(f"unknown pattern name {name!r}")
    kind, size = m.group(1), int(m.group(2))
    if kind == "k":
        if size < 1:
            raise InvalidSpec("kN needs N >= 1")
        return complete(size)
    if kind == "c":
        return cycle(size)
    if kind in ("path", "p"):
        return path(size)
    return star(size)


def gen_instance(spec: InstanceSpec, H: Graph | None = None, rng: random.Random | None = None) -> Graph:
    """Generate the instance; every kind except CliqueOnSqrtN satisfies the Euler bound."""
    k = spec.kind
    if k is InstanceKind.DISJOINT_COPIES:
        if H is None:
            if not spec.pattern:
                raise InvalidSpec("DisjointCopies needs a pattern")
            H = named_pattern(spec.pattern)
        if H.n <= 8:
            from planartest.match.planarity import is_planar_small

            if not is_planar_small(H):
                raise InvalidSpec("DisjointCopies requires a planar pattern")
        if spec.copies < 1:
            raise InvalidSpec("DisjointCopies needs at least one copy")
        G = disjoint_copies(H, spec.copies, spec.pad)
    elif k is InstanceKind.GRID:
        G = grid(spec.rows, spec.cols)
    elif k is InstanceKind.TRIANGULATION_PATCH:
        G = triangulation_patch(spec.rows, spec.cols)
    elif k is InstanceKind.CYCLE:
        G = cycle(spec.n)
    elif k is InstanceKind.MATCHING:
        G = matching(spec.n)
    elif k is InstanceKind.CLIQUE_ON_SQRT_N:
        G = clique_on_sqrt_n(spec.n)
    else:  # pragma: no cover
        raise InvalidSpec(f"unknown kind {k}")
    if spec.shuffle:
        G = relabel(G, rng or random.Random(0))
    if k is not InstanceKind.CLIQUE_ON_SQRT_N and not euler_ok(G.n, G.m):
        raise InvalidSpec(f"{spec.label()} violates the planar edge bound")
    return G


def parse_instance_spec(text: str) -> InstanceSpec:
    """Parse ``grid:5x6``, ``tri:4x4``, ``cycle:10``, ``matching:10``, ``clique:100``, ``copies:triangle:4:2``."""
    parts = text.strip().split(":")
    head = parts[0].lower()
    try:
        kind = InstanceKind(head)
    except ValueError:
        raise InvalidSpec(f"unknown instance kind {head!r}") from None
    try:
        if kind in (InstanceKind.GRID, InstanceKind.TRIANGULATION_PATCH):
            (dims,) = parts[1:]
            r, c = dims.lower().split("x")
            return InstanceSpec(kind, rows=int(r), cols=int(c))
        if kind is InstanceKind.DISJOINT_COPIES:
            if len(parts) not in (3, 4):
                raise ValueError
            pad = int(parts[3]) if len(parts) == 4 else 0
            return InstanceSpec(kind, pattern=parts[1], copies=int(parts[2]), pad=pad)
        (n,) = parts[1:]
        return InstanceSpec(kind, n=int(n))
    except ValueError:
        raise InvalidSpec(f"malformed instance spec {text!r}") from None


def write_edge_list(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"] + [f"{u} {v}" for u, v in G.sorted_edges()]
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    """Parse ``n m`` then ``m`` lines ``u v``. Blank lines and ``#`` comments are skipped."""
    rows = []
    for no, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((no, line))
    if not rows:
        raise ParseError("missing header", 1)

    def ints(no: int, line: str) -> tuple[int, int]:
        f = line.split()
        if len(f) != 2:
            raise ParseError(f"expected two integers, got {line!r}", no)
        try:
            return int(f[0]), int(f[1])
        except ValueError:
            raise ParseError(f"non-integer field in {line!r}", no) from None

    hno, hline = rows[0]
    n, m = ints(hno, hline)
    if n < 0 or m < 0:
        raise ParseError("negative header value", hno)
    body = rows[1:]
    if len(body) != m:
        at = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else hno + 1)
        raise ParseError(f"header declares {m} edges, found {len(body)}", at)
    es = []
    for no, line in body:
        u, v = ints(no, line)
        if not (1 <= u <= n and 1 <= v <= n):
            raise OutOfRange(f"line {no}: edge ({u},{v}) outside 1..{n}")
        es.append((u, v))
    return build_graph(n, es)
