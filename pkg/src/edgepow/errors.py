"""Exception types shared across the package."""

from __future__ import annotations


class EdgepowError(Exception):
    """Base class for all errors raised by edgepow."""


class GraphInputError(EdgepowError):
    """Malformed graph input (parser-level).

    Carries the 1-based line number of the offending record when the input
    came from the text format; ``line`` is None for JSON-level problems.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotACoverError(EdgepowError):
    """A vertex set that was required to be a vertex cover is not one."""


class IsolatedVertexError(EdgepowError):
    """An operation that forbids isolated vertices received a graph with one."""


class DisconnectedInputError(EdgepowError):
    """An operation that requires a connected (weighted) graph got a disconnected one."""


class NotStronglyNonBipartiteError(EdgepowError):
    """An operation requiring every component to carry an odd cycle was violated."""


class ResourceLimitError(EdgepowError):
    """A computation exceeded a declared resource guard.

    Raised instead of silently grinding: the guards bound the exhaustive
    searches (weight-box scans, polarization size, decomposition search).
    """
