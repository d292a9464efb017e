"""Exception hierarchy shared by every module."""


class GraphError(ValueError):
    """Base class for all library errors."""

    def __init__(self, message="", *, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class LoopRejected(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class EdgeNotFound(GraphError):
    pass


class EmptyEdgeSet(GraphError):
    pass


class Disconnected(GraphError):
    pass


class SpecViolation(GraphError):
    pass


class NotRegular(GraphError):
    pass


class MatchingInfeasible(GraphError):
    pass


class BadParams(GraphError):
    pass


class OrderTooSmall(GraphError):
    pass


class OrderUnsupported(GraphError):
    pass


class BadCode(GraphError):
    pass


class UnknownClaim(GraphError):
    pass


class ParseError(GraphError):
    pass


class NotFound(GraphError):
    """Bounded search ended without a certified graph."""

    def __init__(self, message="", *, order=None, residue=None, routes=()):
        super().__init__(message)
        self.order = order
        self.residue = residue
        self.routes = tuple(routes)
