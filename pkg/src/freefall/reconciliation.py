"""Agreement between the exact fall time and the constant-g approximation.

With g = mu / r0^2 (the acceleration at the release point), the constant-g
time for a drop of height h is r0^(3/2) / sqrt(2 mu) * 2 sqrt(eps), eps = h / r0,
while the exact bracket term is 2 sqrt(eps) (1 - eps/6 + O(eps^2)). The relative
discrepancy therefore starts at eps / 6.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from src.bodies.catalog import Body, GravityField
from src.freefall.core import _fall_time, fall_time_constant_g, gravitational_acceleration
from src.utils.validators import DomainError, ensure_at_most, ensure_finite, ensure_positive

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class DropComparison:
    """Both models of the same drop, side by side."""

    r0: float
    height: float
    exact: float
    constant_g: float
    relative_error: float

    @property
    def eps(self) -> float:
        return self.height / self.r0


def _compare(r0: float, h: float, field: GravityField) -> DropComparison:
    r0 = ensure_positive("r0", r0)
    h = ensure_finite("h", h)
    if h <= 0:
        raise DomainError(f"h must be positive; received {h!r}.")
    ensure_at_most("h", h, "r0", r0)

    g = gravitational_acceleration(r0, field)
    schoolbook = fall_time_constant_g(h, g)
    # 1 - K is taken as h / r0 directly so tiny drops keep full precision.
    exact = _fall_time(r0, field.mu, (r0 - h) / r0, h / r0)
    error = abs(schoolbook - exact) / exact
    LOGGER.debug("Drop h=%r from r0=%r: exact=%r s, constant-g=%r s, error=%.3e", h, r0, exact, schoolbook, error)
    return DropComparison(r0=r0, height=h, exact=exact, constant_g=schoolbook, relative_error=error)


def approximation_error(r0: float, h: float, field: GravityField) -> float:
    """Relative error of the constant-g drop time against the exact one.

    Valid for 0 < h <= r0; behaves like (h / r0) / 6 for short drops.
    """

    return _compare(r0, h, field).relative_error


def compare_drop(r0: float, h: float, field: GravityField) -> DropComparison:
    """Exact and constant-g times for a drop of ``h`` metres from ``r0``."""

    return _compare(r0, h, field)


def drop_from_surface(body: Body, height: float) -> DropComparison:
    """Compare both models for a drop of ``height`` metres ending at the surface of ``body``.

    The release point is ``height`` above the mean radius.
    """

    height = ensure_positive("height", height)
    return _compare(body.mean_radius + height, height, body.field)
