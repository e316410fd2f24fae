"""Error hierarchy shared by the counting modules and the CLI."""

from __future__ import annotations

from typing import Any, Dict


class CountingError(RuntimeError):
    """Base error for every failure raised by the library."""

    code = "CountingError"

    def __init__(self, message: str, data: Any | None = None) -> None:
        super().__init__(message)
        self.message = message
        self.data = data

    def as_payload(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"code": self.code, "message": self.message}
        if self.data is not None:
            payload["data"] = self.data
        return payload


class InvalidInput(CountingError):
    """Raised for malformed graphs, documents or parameters."""

    code = "InvalidInput"


class UnknownEdge(InvalidInput):
    """Raised when an edge reference is not part of the graph."""

    code = "UnknownEdge"


class UnbalancedEdgeSet(InvalidInput):
    """Raised when an operation needs a balanced edge set and got another."""

    code = "UnbalancedEdgeSet"


class ResourceLimitExceeded(CountingError):
    """Raised when a computation would exceed a configured size limit."""

    code = "ResourceLimit"

    def __init__(self, message: str, *, limit: int, data: Any | None = None) -> None:
        super().__init__(message, data)
        self.limit = limit


class FlatLimitExceeded(ResourceLimitExceeded):
    code = "FlatLimit"


class OracleBudgetExceeded(ResourceLimitExceeded):
    code = "OracleBudget"


__all__ = [
    "CountingError",
    "FlatLimitExceeded",
    "InvalidInput",
    "OracleBudgetExceeded",
    "ResourceLimitExceeded",
    "UnbalancedEdgeSet",
    "UnknownEdge",
]
