"""Exception types shared across the package."""

from __future__ import annotations

from dataclasses import dataclass


class TableauError(Exception):
    """Base class for all domain errors raised by this package."""


@dataclass(frozen=True)
class Violation:
    """A single validation failure: a short code plus the offending data."""

    code: str
    detail: str

    def __str__(self) -> str:
        return f"{self.code}: {self.detail}"


class ValidationError(TableauError):
    """Raised when a candidate object breaks its invariants.

    Carries *every* violation found, not just the first, so that
    diagnostics can list all offending cells at once.
    """

    def __init__(self, violations: list[Violation]):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class ParseError(TableauError):
    """Malformed textual input; ``position`` is a character offset."""

    def __init__(self, message: str, position: int = 0):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class DomainError(TableauError):
    """An operation was applied outside its domain.

    ``code`` identifies the precondition that failed, e.g. ``nothing-to-cut``
    or ``label-collision``; tests match on it.
    """

    def __init__(self, code: str, message: str):
        self.code = code
        super().__init__(f"{code}: {message}")


class ResourceLimitError(TableauError):
    """A size cap was exceeded (see ALTAB_MAX_N in the README)."""
