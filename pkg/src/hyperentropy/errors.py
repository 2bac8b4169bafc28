"""Exception hierarchy. Every error raised by the library derives from HypergraphError."""

from __future__ import annotations


class HypergraphError(ValueError):
    """Base class. `line` is filled in by the parser when the error maps to input text."""

    def __init__(self, message: str, *, edge_index: int | None = None, vertex: int | None = None):
        super().__init__(message)
        self.edge_index = edge_index
        self.vertex = vertex
        self.line: int | None = None

    def __str__(self) -> str:
        msg = super().__str__()
        if self.line is not None:
            return f"line {self.line}: {msg}"
        return msg


# validation
class NonUniformEdge(HypergraphError):
    pass


class DuplicateEdge(HypergraphError):
    pass


class VertexOutOfRange(HypergraphError):
    pass


class IsolatedVertex(HypergraphError):
    pass


class InvalidParameters(HypergraphError):
    pass


# transforms
class TargetInsideEdge(HypergraphError):
    pass


class SourceNotInEdge(HypergraphError):
    pass


class MultipleEdgeCreated(HypergraphError):
    pass


class IsolatedVertexCreated(HypergraphError):
    pass


class NotLinear(HypergraphError):
    pass


class AnchorNotInEdge(HypergraphError):
    pass


class EdgeIsPendent(HypergraphError):
    pass


class PreconditionMismatch(HypergraphError):
    pass


class Disconnected(HypergraphError):
    pass


# search
class TooLarge(HypergraphError):
    pass


class SearchSpaceTooLarge(HypergraphError):
    def __init__(self, message: str, *, size: int):
        super().__init__(message)
        self.size = size


class RetryExhausted(HypergraphError):
    pass


class HypergraphSyntaxError(HypergraphError):
    def __init__(self, message: str, *, line: int, column: int | None = None):
        super().__init__(message)
        self.line = line
        self.column = column

    def __str__(self) -> str:
        where = f"line {self.line}" if self.column is None else f"line {self.line}, column {self.column}"
        return f"{where}: {ValueError.__str__(self)}"
