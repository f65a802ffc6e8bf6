"""Exception types shared across the package."""

from __future__ import annotations

from typing import Any


class ParseError(ValueError):
    """Malformed quiver file. Carries the 1-based line and column of the fault."""

    def __init__(self, message: str, line: int, column: int | None = None):
        self.line = line
        self.column = column
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")


class UsageError(ValueError):
    """A precondition of an operation was not met by the caller."""


class TheoremViolation(Exception):
    """A computed counterexample to one of the structure theorems.

    ``payload`` holds everything needed to reproduce the failure (the quiver,
    the vertex, the offending dimensions...). It is never expected to fire.
    """

    def __init__(self, statement: str, payload: dict[str, Any]):
        self.statement = statement
        self.payload = payload
        super().__init__(f"{statement}: {payload}")
