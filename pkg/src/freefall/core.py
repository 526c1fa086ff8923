"""Closed-form radial free fall under an inverse-square attraction.

A body released from rest at r0 reaches r1 = K * r0 after

    T = r0^(3/2) / sqrt(2 mu) * f(K),   f(K) = pi/2 - asin(sqrt K) + sqrt(K (1 - K)).

pi/2 - asin(sqrt K) is the angle whose cosine is sqrt K, so f is evaluated as
atan2(sqrt(1 - K), sqrt K) + sqrt(K (1 - K)). atan2 stays well conditioned at
both ends: no cancellation against pi/2 when K is close to 1 (short drops) and
no loss from asin near 1 when K is close to 0 (falls towards the centre).
"""

from __future__ import annotations

import logging
import math

from src.bodies.catalog import GravityField
from src.freefall.models import FallResult, FallScenario
from src.utils.validators import DomainError, ensure_in_closed_interval, ensure_non_negative, ensure_positive

LOGGER = logging.getLogger(__name__)


def _bracket_term(k: float, one_minus_k: float) -> float:
    # Callers pass 1 - K computed from the original lengths when they can.
    return math.atan2(math.sqrt(one_minus_k), math.sqrt(k)) + math.sqrt(k * one_minus_k)


def _fall_time(r0: float, mu: float, k: float, one_minus_k: float) -> float:
    return r0**1.5 / math.sqrt(2.0 * mu) * _bracket_term(k, one_minus_k)


def bracket_term(k: float) -> float:
    """Dimensionless factor f(K) of the exact fall-time formula, for K in [0, 1]."""

    k = ensure_in_closed_interval("k", k, 0.0, 1.0)
    return _bracket_term(k, 1.0 - k)


def fall_time_exact(scenario: FallScenario) -> float:
    """Seconds needed to fall from rest at ``scenario.r0`` to ``scenario.r1``.

    Finite for every valid scenario, including r1 = 0.
    """

    r0, r1 = scenario.r0, scenario.r1
    elapsed = _fall_time(r0, scenario.field.mu, r1 / r0, (r0 - r1) / r0)
    LOGGER.debug("Fall r0=%r -> r1=%r under mu=%r takes %r s", r0, r1, scenario.field.mu, elapsed)
    return elapsed


def fall_time_constant_g(h: float, g: float) -> float:
    """Schoolbook drop time sqrt(2h / g) under a uniform acceleration ``g``."""

    h = ensure_non_negative("h", h)
    g = ensure_positive("g", g)
    return math.sqrt(2.0 * h / g)


def gravitational_acceleration(r: float, field: GravityField) -> float:
    """Magnitude of the acceleration mu / r^2 at distance ``r``."""

    r = ensure_positive("r", r)
    return field.mu / r**2


def radial_speed(r: float, scenario: FallScenario) -> float:
    """Radial velocity dr/dt at radius ``r`` during the fall (never positive).

    Computed as -sqrt(2 mu (r0 - r) / (r r0)), which is 0 at the release point.
    """

    r = ensure_positive("r", r)
    if r > scenario.r0:
        raise DomainError(f"r exceeds r0 ({r!r} > {scenario.r0!r}).")
    if r == scenario.r0:
        return 0.0
    return -math.sqrt(2.0 * scenario.field.mu * (scenario.r0 - r) / (r * scenario.r0))


def collapse_time(radius: float, field: GravityField) -> float:
    """Time to fall from ``radius`` to the centre, (pi/2) R^(3/2) / sqrt(2 mu).

    Shares the code path of :func:`fall_time_exact` with r1 = 0.
    """

    radius = ensure_positive("radius", radius)
    return fall_time_exact(FallScenario(r0=radius, r1=0.0, field=field))


def fall(scenario: FallScenario) -> FallResult:
    """Elapsed time and arrival speed for ``scenario``."""

    elapsed = fall_time_exact(scenario)
    if scenario.r1 == 0:
        return FallResult(elapsed=elapsed, impact_speed=None, unbounded=True)
    return FallResult(elapsed=elapsed, impact_speed=abs(radial_speed(scenario.r1, scenario)))
