"""Exceptions raised by the numerical machinery."""

from __future__ import annotations

from typing import Any, Optional


class NumericalError(RuntimeError):
    """Raised when a numerical routine cannot deliver the requested accuracy."""


class NoBracket(NumericalError):
    """Raised when a root search is started on an interval without a sign change."""


class MaxIterations(NumericalError):
    """Raised when a root search exhausts its iteration budget."""


class StepLimit(NumericalError):
    """Raised when the integrator exhausts its step budget before the event fires.

    ``partial`` holds the solution integrated so far.
    """

    def __init__(self, message: str, partial: Optional[Any] = None) -> None:
        super().__init__(message)
        self.partial = partial
