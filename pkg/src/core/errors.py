"""
Exception Hierarchy
===================

Custom exception hierarchy for granular error handling.
All inherit from NetGroupsError for blanket exception catching; the CLI maps
them onto exit codes (I/O versus computation failures).
"""

from typing import Optional


class NetGroupsError(Exception):
    """Base exception for all netgroups errors."""
    pass


class EdgeListParseError(NetGroupsError):
    """Raised when an edge-list line cannot be parsed."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class EmptyGraphError(NetGroupsError):
    """Raised when an input yields a graph without links."""
    pass


class ContractViolation(NetGroupsError, ValueError):
    """Raised when a caller breaks a documented precondition (bad id, bad parameter)."""
    pass


class SamplingError(NetGroupsError):
    """Raised when a sample cannot be drawn (e.g. no degree mass for RD)."""
    pass


class SearchError(NetGroupsError):
    """Raised when no group can be searched for (graph without links)."""
    pass


class NullModelError(NetGroupsError):
    """Raised when the Erdos-Renyi null cannot be simulated."""
    pass


class ProvenanceMismatchError(NetGroupsError):
    """Raised when a result is analysed against a graph it was not produced from."""
    pass


class ResultFormatError(NetGroupsError):
    """Raised when a stored groups file is malformed."""
    pass
