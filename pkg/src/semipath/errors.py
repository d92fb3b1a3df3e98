"""Exception hierarchy shared by every module.

Each error carries a ``kind`` (its class name) so the CLI can report it in a
structured way without knowing about individual modules.
"""
from __future__ import annotations


class SemipathError(Exception):
    """Base class for all recoverable errors raised by this package."""

    def __init__(self, message: str, *, line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    @property
    def kind(self) -> str:
        return type(self).__name__

    def location(self) -> str | None:
        if self.line is None:
            return None
        if self.column is None:
            return f"line {self.line}"
        return f"line {self.line}, column {self.column}"


class InvalidMatrix(SemipathError):
    pass


class ParseError(SemipathError):
    pass


class DuplicateEdge(SemipathError):
    pass


class UnknownVertex(SemipathError):
    pass


class UnknownState(SemipathError):
    pass


class UnknownLetter(SemipathError):
    pass


class CyclicInput(SemipathError):
    pass


class NegativeCycle(SemipathError):
    pass


class SelfLoop(SemipathError):
    pass


class InvalidGap(SemipathError):
    pass


class NotRainbow(SemipathError):
    pass


class SizeLimitExceeded(SemipathError):
    pass
