"""Exception types raised by the square-set toolkit."""

from __future__ import annotations

from typing import Sequence


class SquareSetError(ValueError):
    """Base class for user-facing errors."""


class DomainError(SquareSetError):
    """An operation was called outside its precondition."""


class ValidationError(SquareSetError):
    """A set (or set literal) is not acceptable."""

    def __init__(self, message: str, *, token: str | None = None) -> None:
        super().__init__(message)
        self.token = token


class DegenerateError(SquareSetError):
    """A construction produced repeated or zero elements."""


class ConfigError(SquareSetError):
    """Invalid search or quartic configuration."""


class InvariantViolation(RuntimeError):
    """An exactness invariant failed; indicates a bug, not bad input."""


class VerificationFailure(SquareSetError):
    def __init__(self, message: str, *, failures: Sequence[object] = ()) -> None:
        super().__init__(message)
        self.failures = list(failures)
