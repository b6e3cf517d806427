"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations

from typing import Iterable


class FinPermError(Exception):
    """Base class for all errors raised by finperm."""


class ContractError(FinPermError, ValueError):
    """A documented precondition of an operation was violated."""


class BoundError(ContractError):
    """An enumeration was requested over a universe that is too large."""


class CycleError(ContractError):
    """A cycle list is malformed (duplicate atom, overlap, or singleton)."""

    def __init__(self, message: str, cycle=None) -> None:
        super().__init__(message)
        self.cycle = cycle


class ParseError(FinPermError, ValueError):
    """Syntax error in one of the text formats, with offset and expected tokens."""

    def __init__(self, message: str, position: int, expected: Iterable[str] = ()) -> None:
        self.position = position
        self.expected = tuple(sorted(set(expected)))
        detail = f"{message} at offset {position}"
        if self.expected:
            detail += f" (expected {', '.join(map(repr, self.expected))})"
        super().__init__(detail)
        self.message = message
