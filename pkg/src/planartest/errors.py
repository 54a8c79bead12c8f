"""Exception hierarchy shared by every module."""

from __future__ import annotations


class PlanarTestError(Exception):
    """Base class for all package errors."""


class OutOfRange(PlanarTestError):
    """A vertex id falls outside 1..n."""


class SelfLoop(PlanarTestError):
    """An edge joins a vertex to itself."""


class EmptyGraph(PlanarTestError):
    """An operation needs at least one vertex."""


class IsolatedVertex(PlanarTestError):
    """A random neighbor was requested for a degree-0 vertex."""


class IndexOutOfRange(PlanarTestError):
    """An indexed neighbor query asked for a position past deg(v)."""


class ParseError(PlanarTestError):
    """Malformed edge-list text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class SizeLimit(PlanarTestError):
    """Input exceeds the cap of an exhaustive search."""


class InvalidSpec(PlanarTestError):
    """Instance or experiment description is malformed."""


class InvalidOrder(PlanarTestError):
    """A contraction order is not a permutation of V(H), or H is disconnected."""


class UnsafeContraction(PlanarTestError):
    """A contracted vertex has different neighbor sets in two copies."""

    def __init__(self, vertex: int, copy_a: int, copy_b: int, step: int):
        self.vertex = vertex
        self.copies = (copy_a, copy_b)
        self.step = step
        super().__init__(
            f"vertex {vertex} is unsafe at step {step}: "
            f"copies {copy_a} and {copy_b} disagree on its neighbors"
        )


class ContractionEdgeMissing(PlanarTestError):
    """A shadow-graph contraction found no edge (u, w) to contract."""


class NoLowDegreeVertex(PlanarTestError):
    """AL selection found no vertex with at most 6h distinct neighbors."""


class PreconditionViolated(PlanarTestError):
    """An operation was called outside its documented precondition."""
