"""Shared exception types."""


class CapacityError(ValueError):
    """Input exceeds a hard size limit (vertex cap, subset-enumeration cap)."""


class InvalidEdgeError(ValueError):
    """An edge argument is not an edge of the given graph."""


class Graph6Error(ValueError):
    """Malformed graph6 input; carries the byte offset of the problem."""

    def __init__(self, message, offset=None):
        super().__init__(message if offset is None else f"{message} (offset {offset})")
        self.offset = offset


class ConsistencyError(RuntimeError):
    """Two routes that must agree exactly disagreed; signals a bug, never expected."""
