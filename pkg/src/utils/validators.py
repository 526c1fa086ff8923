"""Validation helpers for physical inputs."""

from __future__ import annotations

import math


class DomainError(ValueError):
    """Raised when an input lies outside the domain of a formula."""


def ensure_finite(name: str, value: float) -> float:
    """Return ``value`` as a float, rejecting NaN and infinities."""

    try:
        coerced = float(value)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"{name} must be a real number; received {value!r}.") from exc
    if not math.isfinite(coerced):
        raise DomainError(f"{name} must be finite; received {value!r}.")
    return coerced


def ensure_positive(name: str, value: float) -> float:
    """Ensure ``value`` is a finite number strictly greater than zero."""

    coerced = ensure_finite(name, value)
    if coerced <= 0:
        raise DomainError(f"{name} must be positive; received {coerced!r}.")
    return coerced


def ensure_non_negative(name: str, value: float) -> float:
    """Ensure ``value`` is a finite number greater than or equal to zero."""

    coerced = ensure_finite(name, value)
    if coerced < 0:
        raise DomainError(f"{name} must be non-negative; received {coerced!r}.")
    return coerced


def ensure_in_closed_interval(name: str, value: float, low: float, high: float) -> float:
    """Ensure ``low <= value <= high``."""

    coerced = ensure_finite(name, value)
    if coerced < low or coerced > high:
        raise DomainError(f"{name} must lie in [{low:g}, {high:g}]; received {coerced!r}.")
    return coerced


def ensure_at_most(name: str, value: float, limit_name: str, limit: float) -> float:
    """Ensure ``value <= limit``; the message names both quantities."""

    if value > limit:
        raise DomainError(f"{name} exceeds {limit_name} ({value!r} > {limit!r}).")
    return value
