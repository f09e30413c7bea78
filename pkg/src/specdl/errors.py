"""Exception hierarchy shared by every module."""

from __future__ import annotations


class SpecDLError(Exception):
    """Base class for all errors raised by specdl."""


class ParameterError(SpecDLError, ValueError):
    """A family or operation parameter is outside its valid range."""


class MissingEdgeError(SpecDLError, KeyError):
    pass


class DisconnectedGraphError(SpecDLError, ValueError):
    """Distances (and everything built on them) need a connected graph."""


class ParseError(SpecDLError, ValueError):
    pass


class MalformedHeaderError(ParseError):
    pass


class VertexIndexError(ParseError):
    pass


class Graph6ByteError(ParseError):
    pass


class SizeLimitError(SpecDLError, ValueError):
    pass


class ConvergenceError(SpecDLError, ArithmeticError):
    """Jacobi iteration did not reach the off-diagonal tolerance."""

    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual


class OrderMismatchError(SpecDLError, ValueError):
    pass


class DiameterError(SpecDLError, ValueError):
    pass


class NotBipartiteError(SpecDLError, ValueError):
    pass
