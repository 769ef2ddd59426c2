"""
Exception hierarchy for fcgenus.

Every domain error derives from GenusError and carries the process exit code
the CLI reports for it.
"""

from typing import Any, Dict, Optional


class GenusError(Exception):
    """Base class for all domain errors."""

    exit_code: int = 2

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.context = context or {}


class InvalidGraph(GenusError):
    """Malformed multigraph (no vertices, endpoint out of range)."""


class DisconnectedGraph(GenusError):
    """The operation requires a connected graph."""

    def __init__(self, message: str = "graph is disconnected", context: Optional[Dict[str, Any]] = None):
        super().__init__(message, context)


class ParseError(GenusError):
    """Edge-list input does not conform to the format."""

    def __init__(self, message: str, line_number: int, context: Optional[Dict[str, Any]] = None):
        super().__init__(f"line {line_number}: {message}", context)
        self.line_number = line_number


class NotSimple(GenusError):
    """A simple graph was required but loops or parallel edges were found."""


class InvalidSpanningTree(GenusError):
    """An edge set offered as a spanning tree is not one."""


class InvalidParameters(GenusError):
    """Generator or configuration parameters outside their valid range."""


class PreconditionFailed(GenusError):
    """A theorem checker was called on input violating its premise."""


class NotATwoComponentCut(GenusError):
    """The edge set does not split the graph into exactly two connected sides."""


class BudgetExceeded(GenusError):
    """An oracle refused work that would exceed its budget."""

    exit_code = 3

    def __init__(self, limit_name: str, limit: int, observed: int):
        super().__init__(
            f"oracle budget exceeded: {limit_name}={observed} > {limit}",
            {"limit_name": limit_name, "limit": limit, "observed": observed},
        )
        self.limit_name = limit_name
        self.limit = limit
        self.observed = observed


class InvariantViolation(GenusError):
    """An internal invariant or a checked theorem claim failed."""

    exit_code = 1
