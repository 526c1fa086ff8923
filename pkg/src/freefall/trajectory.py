"""Radius as a function of time, by inverting the fall-time formula."""

from __future__ import annotations

import logging
import operator
from typing import List

import numpy as np

from config.settings import Settings, settings as default_settings
from src.bodies.catalog import GravityField
from src.freefall.core import _fall_time, collapse_time, fall_time_exact, radial_speed
from src.freefall.models import FallScenario, TrajectorySample
from src.numerics.root_finding import find_root
from src.numerics.tolerances import ToleranceConfig
from src.utils.validators import DomainError, ensure_finite, ensure_non_negative, ensure_positive

LOGGER = logging.getLogger(__name__)


def radius_at_time(
    t: float,
    r0: float,
    field: GravityField,
    *,
    config: Settings | None = None,
) -> float:
    """Radius reached ``t`` seconds after release from rest at ``r0``.

    The elapsed time is strictly decreasing in the radius reached, so the
    radius is the unique root of T(r) - t on [0, r0].
    """

    config = config or default_settings
    r0 = ensure_positive("r0", r0)
    t = ensure_finite("t", t)
    t_collapse = collapse_time(r0, field)
    if t < 0:
        raise DomainError(f"t must be non-negative; received {t!r}.")
    if t > t_collapse:
        raise DomainError(f"t exceeds the collapse time ({t!r} > {t_collapse!r} s).")
    if t == 0:
        return r0
    if t == t_collapse:
        return 0.0

    mu = field.mu

    def residual(r: float) -> float:
        return _fall_time(r0, mu, r / r0, (r0 - r) / r0) - t

    radius = find_root(residual, 0.0, r0, ToleranceConfig.for_root_finding(config))
    tol_t = config.trajectory.time_residual_fraction * t_collapse
    achieved = abs(residual(radius))
    if achieved > tol_t:
        LOGGER.warning(
            "Time residual %.3e s at t=%r exceeds %.3e s; radius %r is the closest double",
            achieved,
            t,
            tol_t,
            radius,
        )
    return radius


def sample_trajectory(
    r0: float,
    field: GravityField,
    n: int,
    floor_radius: float = 0.0,
    *,
    config: Settings | None = None,
) -> List[TrajectorySample]:
    """Tabulate ``n`` samples of (t, r, v) at evenly spaced times.

    The samples span the fall from ``r0`` down to ``floor_radius``. The velocity
    at r = 0 is unbounded and reported as None.
    """

    try:
        n = operator.index(n)
    except TypeError as exc:
        raise DomainError(f"n must be an integer; received {n!r}.") from exc
    if n < 2:
        raise DomainError(f"n must be at least 2; received {n}.")
    floor_radius = ensure_non_negative("floor_radius", floor_radius)
    if floor_radius >= ensure_positive("r0", r0):
        raise DomainError(f"floor_radius must be below r0 ({floor_radius!r} >= {r0!r}).")

    scenario = FallScenario(r0=r0, r1=floor_radius, field=field)
    times = np.linspace(0.0, fall_time_exact(scenario), n)
    if not np.all(np.diff(times) > 0):
        raise DomainError(
            f"fall time from r0={r0!r} to {floor_radius!r} underflows: {n} samples cannot have distinct times."
        )

    config = config or default_settings
    energy_tol = config.trajectory.energy_rel_tol
    initial_energy = -field.mu / r0
    samples: List[TrajectorySample] = []
    for index, t in enumerate(times):
        if index == 0:
            r = r0
        elif index == n - 1:
            r = floor_radius
        else:
            r = min(max(radius_at_time(float(t), r0, field, config=config), floor_radius), r0)
        v = radial_speed(r, scenario) if r > 0 else None
        sample = TrajectorySample(t=float(t), r=r, v=v)
        if v is not None and initial_energy != 0:
            drift = abs(sample.specific_energy(field) - initial_energy) / abs(initial_energy)
            if drift > energy_tol:
                LOGGER.warning("Energy off by %.3e (relative) at r=%r; tolerance %.1e", drift, r, energy_tol)
        samples.append(sample)

    LOGGER.debug("Sampled %d points from r0=%r to floor=%r", n, r0, floor_radius)
    return samples
