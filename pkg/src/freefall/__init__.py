"""Closed-form radial free fall: times, speeds, trajectories and approximations."""

from .models import FallResult, FallScenario, TrajectorySample
from .core import (
    bracket_term,
    collapse_time,
    fall,
    fall_time_constant_g,
    fall_time_exact,
    gravitational_acceleration,
    radial_speed,
)
from .trajectory import radius_at_time, sample_trajectory
from .reconciliation import DropComparison, approximation_error, compare_drop, drop_from_surface

__all__ = [
    "DropComparison",
    "FallResult",
    "FallScenario",
    "TrajectorySample",
    "approximation_error",
    "bracket_term",
    "collapse_time",
    "compare_drop",
    "drop_from_surface",
    "fall",
    "fall_time_constant_g",
    "fall_time_exact",
    "gravitational_acceleration",
    "radial_speed",
    "radius_at_time",
    "sample_trajectory",
]
