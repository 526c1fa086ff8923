"""Orbital periods and the degenerate-ellipse limit of radial fall.

A circular orbit of radius R has period 2 pi R^(3/2) / sqrt(mu), exactly 4 sqrt 2
times the collapse time from R. An ellipse with apoapsis R and periapsis
delta * R has period 2 pi ((1 + delta) R / 2)^(3/2) / sqrt(mu); as delta -> 0
the ellipse flattens into the radial segment and half of its period becomes
the collapse time.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Iterable, List, Tuple

from src.bodies.catalog import GravityField
from src.freefall.core import collapse_time
from src.utils.validators import DomainError, ensure_at_most, ensure_in_closed_interval, ensure_non_negative, ensure_positive

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class EllipseGeometry:
    """Apoapsis and periapsis distances of a Keplerian ellipse."""

    r_max: float
    r_min: float

    def __post_init__(self) -> None:
        r_max = ensure_positive("r_max", self.r_max)
        r_min = ensure_non_negative("r_min", self.r_min)
        ensure_at_most("r_min", r_min, "r_max", r_max)
        object.__setattr__(self, "r_max", r_max)
        object.__setattr__(self, "r_min", r_min)

    @classmethod
    def circle(cls, radius: float) -> "EllipseGeometry":
        return cls(r_max=radius, r_min=radius)

    @classmethod
    def degenerate(cls, r_max: float, delta: float) -> "EllipseGeometry":
        """Ellipse with periapsis ``delta * r_max``."""

        return cls(r_max=r_max, r_min=delta * r_max)

    @property
    def r_star(self) -> float:
        """Mean of apoapsis and periapsis, i.e. the semi-major axis."""

        return 0.5 * (self.r_max + self.r_min)

    semi_major_axis = r_star

    @property
    def eccentricity(self) -> float:
        return (self.r_max - self.r_min) / (self.r_max + self.r_min)


def _kepler_period(a: float, mu: float) -> float:
    return 2.0 * math.pi * a**1.5 / math.sqrt(mu)


def circular_period(radius: float, field: GravityField) -> float:
    """Period of a circular orbit of ``radius`` metres."""

    radius = ensure_positive("radius", radius)
    return _kepler_period(radius, field.mu)


def angular_velocity(radius: float, field: GravityField) -> float:
    """Angular velocity sqrt(mu / R^3) of a circular orbit, in rad/s."""

    radius = ensure_positive("radius", radius)
    return math.sqrt(field.mu / radius**3)


def elliptical_period(geometry: EllipseGeometry, field: GravityField) -> float:
    """Period of an elliptical orbit; depends only on the semi-major axis.

    A periapsis of zero is accepted: the formula stays regular as the ellipse
    degenerates into a radial segment.
    """

    if geometry.r_min == 0:
        # Radial segment: half the period is the fall from r_max to the centre.
        period = 2.0 * collapse_time(geometry.r_max, field)
    else:
        period = _kepler_period(geometry.r_star, field.mu)
    LOGGER.debug(
        "Ellipse r_max=%r r_min=%r (e=%.6f): period %r s",
        geometry.r_max,
        geometry.r_min,
        geometry.eccentricity,
        period,
    )
    return period


def half_period(geometry: EllipseGeometry, field: GravityField) -> float:
    """Time from apoapsis to periapsis."""

    return 0.5 * elliptical_period(geometry, field)


def period_to_collapse_ratio(radius: float, field: GravityField) -> float:
    """Circular period over collapse time from the same radius (4 sqrt 2)."""

    return circular_period(radius, field) / collapse_time(radius, field)


def degenerate_limit_check(
    r0: float,
    field: GravityField,
    deltas: Iterable[float],
) -> List[Tuple[float, float]]:
    """Half-period of increasingly flat ellipses relative to the collapse time.

    For each delta returns ``(delta, ratio)`` with ratio equal to half the
    period of the ellipse (r_max = r0, r_min = delta * r0) divided by the
    collapse time from r0. The ratio is (1 + delta)^(3/2): 1 at delta = 0,
    2 sqrt 2 at delta = 1 (the circle), decreasing towards 1 as delta shrinks.

    The common factor pi r0^(3/2) / sqrt(mu) is cancelled before rounding, so
    the ratio is exactly 1.0 at delta = 0 and never below 1.
    """

    r0 = ensure_positive("r0", r0)
    t_collapse = collapse_time(r0, field)
    rows: List[Tuple[float, float]] = []
    for delta in deltas:
        delta = ensure_in_closed_interval("delta", delta, 0.0, 1.0)
        geometry = EllipseGeometry.degenerate(r0, delta)
        ratio = (geometry.r_star / (0.5 * r0)) ** 1.5
        LOGGER.debug(
            "delta=%r: half period %r s against collapse %r s", delta, half_period(geometry, field), t_collapse
        )
        rows.append((delta, ratio))
    if not rows:
        raise DomainError("deltas must contain at least one value.")
    return rows
