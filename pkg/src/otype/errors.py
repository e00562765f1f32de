"""Exception hierarchy shared across the package."""

from __future__ import annotations


class OTypeError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(OTypeError):
    """An operation was applied outside its domain (bad argument, wrong shape)."""


class InvalidOrderError(DomainError):
    """A relation is not a strict partial order (cycle, reflexive pair, ...)."""


class ResourceLimitError(OTypeError):
    """A configured cap (nesting depth, enumeration size) was exceeded."""


class ParseError(OTypeError):
    """Syntax error in an ordinal, poset, or term expression.

    ``position`` is the 0-based offset into the original input text.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position
