"""Formatting utilities for presentation and logging."""

from __future__ import annotations

import math
from typing import Optional

_MINUTE = 60.0
_HOUR = 3600.0
_DAY = 86400.0
_YEAR = 365.25 * _DAY


def _coerce_finite_float(value: Optional[float]) -> Optional[float]:
    """Attempt to coerce a value to a finite float, returning None otherwise."""

    try:
        coerced = float(value)  # type: ignore[arg-type]
    except (TypeError, ValueError):
        return None

    if math.isnan(coerced) or math.isinf(coerced):
        return None

    return coerced


def format_significant(value: Optional[float], digits: int) -> str:
    """Render ``value`` with ``digits`` significant digits (scientific notation allowed).

    Non-finite or missing values render as an empty string.
    """

    coerced = _coerce_finite_float(value)
    if coerced is None:
        return ""
    text = f"{coerced:.{digits}g}"
    return "0" if text in {"0", "-0"} else text


def round_significant(value: Optional[float], digits: int) -> Optional[float]:
    """Round ``value`` to ``digits`` significant digits, keeping None/non-finite as None."""

    text = format_significant(value, digits)
    return float(text) if text else None


def format_duration(seconds: Optional[float], threshold: float = 120.0) -> str:
    """Friendly rendering of a long duration, e.g. "≈ 14.9 min".

    Durations at or below ``threshold`` seconds return an empty string.
    """

    coerced = _coerce_finite_float(seconds)
    if coerced is None or coerced <= threshold:
        return ""
    for unit, size in (("yr", _YEAR), ("d", _DAY), ("h", _HOUR)):
        if coerced >= 2 * size:
            return f"≈ {coerced / size:.3g} {unit}"
    return f"≈ {coerced / _MINUTE:.3g} min"
