"""Exception hierarchy shared by every module."""

from __future__ import annotations


class WscError(Exception):
    """Base class for domain errors (CLI exit code 2)."""


class InvalidVertex(WscError):
    pass


class NotAVertex(WscError):
    pass


class VoidComplex(WscError):
    pass


class InvalidDimension(WscError):
    pass


class ArityMismatch(WscError):
    pass


class InvalidWeight(WscError):
    pass


class NotSquarefree(WscError):
    pass


class InvalidExponent(WscError):
    pass


class DegenerateIdeal(WscError):
    """Raised for the zero or unit ideal where a proper nonzero one is required."""


class ParseError(WscError):
    def __init__(self, message: str, *, line: int | None = None, field: str | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.line = line
        self.field = field


class ResourceLimit(Exception):
    """A configured search or size bound was exceeded (CLI exit code 3)."""
