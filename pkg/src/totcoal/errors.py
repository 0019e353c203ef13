"""Exception hierarchy shared by every module."""

from __future__ import annotations


class TotcoalError(Exception):
    """Base class for domain errors (CLI exit status 1)."""


class GraphError(TotcoalError, ValueError):
    """Invalid graph construction input."""


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)


class IsolatedVertexError(TotcoalError):
    """The graph has an isolated vertex, so no total dominating set exists."""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(
            f"vertex {vertex} is isolated: no total dominating set exists"
        )


class PreconditionError(TotcoalError):
    pass


class StructuralPartitionError(TotcoalError):
    """Parts overlap, are empty, or do not cover the vertex set."""


class ContractError(TotcoalError, ValueError):
    pass
