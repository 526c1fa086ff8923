"""Circular and elliptical orbital periods."""

from .periods import (
    EllipseGeometry,
    angular_velocity,
    circular_period,
    degenerate_limit_check,
    elliptical_period,
    half_period,
    period_to_collapse_ratio,
)

__all__ = [
    "EllipseGeometry",
    "angular_velocity",
    "circular_period",
    "degenerate_limit_check",
    "elliptical_period",
    "half_period",
    "period_to_collapse_ratio",
]
