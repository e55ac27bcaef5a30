"""Custom exceptions for Steiner Toolkit."""

from typing import Optional


class SteinerToolkitError(Exception):
    """Base exception for all Steiner Toolkit errors."""
    pass


class ConfigurationError(SteinerToolkitError, ValueError):
    """Raised when a configuration value is malformed or out of range."""
    pass


class GraphError(SteinerToolkitError, ValueError):
    """Raised when a graph cannot be constructed from the given input."""
    pass


class Graph6DecodeError(GraphError):
    """Raised when a graph6 line is malformed."""

    def __init__(self, message: str, offset: int, line: Optional[str] = None):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset
        self.line = line


class EdgeListError(GraphError):
    """Raised when an edge-list document is malformed."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class DisconnectedGraphError(SteinerToolkitError, ValueError):
    """Raised when an operation that needs a connected graph gets a disconnected one."""
    pass


class GraphOrderError(SteinerToolkitError, ValueError):
    """Raised when a graph's order is below the range an operation is defined for."""
    pass


class SubsetSizeError(SteinerToolkitError, ValueError):
    """Raised when a subset size k or a terminal count is out of range."""
    pass


class VertexRangeError(SteinerToolkitError, ValueError):
    """Raised when a vertex label lies outside 0..n-1."""
    pass


class OracleLimitError(SteinerToolkitError):
    """Raised when the brute-force oracle is asked for a graph above its size cap."""
    pass


class FamilyParameterError(SteinerToolkitError, ValueError):
    """Raised when family parameters violate the family's constraints."""

    def __init__(self, family: str, inequality: str):
        super().__init__(f"{family}: parameters violate {inequality}")
        self.family = family
        self.inequality = inequality
