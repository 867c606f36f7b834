from typing import Optional


class SqColourError(Exception):
    """Base class of every error raised by this package."""


class DomainError(SqColourError, ValueError):
    """An input lies outside the domain of the operation."""


class InvariantError(DomainError):
    """A colouring (or an internal record) breaks one of its invariants."""


class PreconditionError(DomainError):
    """An operation was called with its precondition unmet."""


class CoverageError(DomainError):
    """A family of classes leaves part of [1, n] uncovered."""

    def __init__(self, message: str, witness: Optional[int] = None):
        super(CoverageError, self).__init__(message)
        self.witness = witness


class CapacityError(SqColourError):
    """The request exceeds a representation limit."""
