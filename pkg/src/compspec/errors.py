"""Exception types shared across the package.

Every error raised on purpose derives from CompspecError, so callers can
catch the package's failures with one handler while letting genuine bugs
(TypeError and friends) propagate.
"""

from __future__ import annotations


class CompspecError(Exception):
    """Base class for all deliberate failures in this package."""


class SelfLoopError(CompspecError):
    """An arc (v, v) was supplied; simple digraphs have no self-loops."""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"self-loop at vertex {vertex} is not allowed")


class VertexOutOfRangeError(CompspecError):
    """A vertex index fell outside range(n)."""

    def __init__(self, vertex: int, n: int):
        self.vertex = vertex
        self.n = n
        super().__init__(f"vertex {vertex} out of range for order {n}")


class SizeLimitExceeded(CompspecError):
    """An input exceeded a configured size cap; refusing rather than hanging."""


class NotStronglyConnected(CompspecError):
    """An operation that requires a strongly connected digraph got something else."""


class NonConvergence(CompspecError):
    """Iteration failed to reach the requested tolerance within its budget."""


class NoRealRootAtOrAboveZero(CompspecError):
    """The polynomial has no real root >= 0, so there is nothing to bracket."""


class InvalidFamilyParameters(CompspecError):
    """Family parameters violate the family's constraints."""


class IncomparableTolerances(CompspecError):
    """Spectra were computed too coarsely to compare at the requested tolerance."""
