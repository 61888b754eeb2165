"""Exception hierarchy shared by the solver, the file formats and the CLI."""

from __future__ import annotations


class WaterfillError(Exception):
    """Base class for every error raised by this package."""


class DomainError(WaterfillError, ValueError):
    """An argument lies outside the domain an operation accepts."""


class DimensionError(DomainError):
    """The problem is too large for an operation with bounded cost."""


class ProfileError(DomainError):
    """A profile document failed to parse or validate.

    ``row`` is the 1-based data row (the header is not counted) and ``field``
    names the offending column when the error can be pinned to one.
    """

    def __init__(self, message: str, row: int | None = None, field: str | None = None):
        self.row = row
        self.field = field
        where = []
        if row is not None:
            where.append(f"row {row}")
        if field is not None:
            where.append(f"field '{field}'")
        prefix = ", ".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)
