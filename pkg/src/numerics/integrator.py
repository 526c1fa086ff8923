"""Adaptive Runge-Kutta integration of radial free fall, used as an oracle.

The equation of motion r'' = -mu / r^2 is integrated as the first-order system
(r, v)' = (v, -mu / r^2) in dimensionless variables

    x = r / r0,   u = v / sqrt(mu / r0),   tau = t / sqrt(r0^3 / mu),

so that x'' = -1 / x^2 with x(0) = 1, u(0) = 0 for every (r0, mu). The
integrator is scipy's DOP853 embedded pair, advanced one step at a time so that
the step size can be capped at a fraction of the local free-fall scale
sqrt(x^3) and so that the crossing of the target radius can be located on the
step's dense-output interpolant.
"""

from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass, field as dataclass_field
from typing import Any, List, Tuple

import numpy as np
from scipy.integrate import DOP853, RK45, OdeSolution

from config.settings import Settings, settings as default_settings
from src.bodies.catalog import GravityField
from src.freefall.models import TrajectorySample
from src.numerics.errors import NumericalError, StepLimit
from src.numerics.root_finding import find_root
from src.numerics.tolerances import ToleranceConfig
from src.utils.validators import DomainError, ensure_finite, ensure_positive

LOGGER = logging.getLogger(__name__)

_SOLVERS = {"DOP853": DOP853, "RK45": RK45}

# Dimensionless time to reach the centre, pi / (2 sqrt 2).
_SCALED_COLLAPSE_TIME = math.pi / (2.0 * math.sqrt(2.0))


class TerminationReason(str, enum.Enum):
    """Why an integration stopped."""

    REACHED_TARGET_RADIUS = "reached_target_radius"
    REACHED_FLOOR = "reached_floor"
    STEP_LIMIT = "step_limit"


@dataclass(frozen=True)
class IvpSolution:
    """Accepted-step samples of an integrated fall plus a dense interpolant."""

    samples: Tuple[TrajectorySample, ...]
    terminal_time: float
    terminated_by: TerminationReason
    max_energy_drift: float
    steps: int
    nfev: int
    r0: float
    time_scale: float
    _dense: Any = dataclass_field(default=None, repr=False, compare=False)

    def radius_at(self, t: float) -> float:
        """Interpolated radius at time ``t`` in [0, terminal_time]."""

        return float(self._state_at(t)[0]) * self.r0

    def velocity_at(self, t: float) -> float:
        """Interpolated radial velocity at time ``t`` in [0, terminal_time]."""

        return float(self._state_at(t)[1]) * self.r0 / self.time_scale

    def _state_at(self, t: float) -> np.ndarray:
        if self._dense is None:
            raise NumericalError("solution carries no dense output")
        if t < 0 or t > self.terminal_time * (1 + 1e-12):
            raise DomainError(f"t must lie in [0, {self.terminal_time!r}]; received {t!r}.")
        return self._dense(min(t, self.terminal_time) / self.time_scale)


def _rhs(_tau: float, y: np.ndarray) -> np.ndarray:
    x, u = y
    return np.array([u, -1.0 / (x * x)])


def _energy_drift(y: np.ndarray) -> float:
    # Scaled energy u^2/2 - 1/x equals -1 for a fall from rest at x = 1.
    x, u = y
    return abs(0.5 * u * u - 1.0 / x + 1.0)


def integrate_radial_fall(
    r0: float,
    field: GravityField,
    target_r: float,
    tol: ToleranceConfig | None = None,
    *,
    config: Settings | None = None,
) -> IvpSolution:
    """Integrate a fall from rest at ``r0`` until the radius reaches ``target_r``.

    Args:
        r0: Release radius in metres.
        field: Field of the attracting point mass.
        target_r: Radius at which to stop, with 0 < target_r < r0.
        tol: Tolerances on the dimensionless state and the step cap.
        config: Settings supplying defaults (method, step-size fraction).

    Raises:
        DomainError: target_r outside (0, r0).
        StepLimit: ``tol.max_steps`` accepted steps were taken without reaching
            the target; the partial solution is attached as ``exc.partial``.

    A target too close to the centre for the solver to resolve before its time
    bound (the analytic collapse time) ends with ``terminated_by`` set to
    ``REACHED_FLOOR`` and the last accepted step as the final sample.
    """

    config = config or default_settings
    r0 = ensure_positive("r0", r0)
    target_r = ensure_finite("target_r", target_r)
    if target_r <= 0:
        raise DomainError("target_r must be positive; the equation of motion is singular at r = 0.")
    if target_r >= r0:
        raise DomainError(f"target_r must be below r0 ({target_r!r} >= {r0!r}).")
    tol = tol or ToleranceConfig.for_integration(config)

    time_scale = math.sqrt(r0**3 / field.mu)
    speed_scale = r0 / time_scale
    x_target = target_r / r0
    fraction = config.integrator.max_step_fraction

    solver = _SOLVERS[config.integrator.method](
        _rhs,
        0.0,
        np.array([1.0, 0.0]),
        _SCALED_COLLAPSE_TIME,
        rtol=tol.rel_tol,
        atol=tol.abs_tol,
        max_step=fraction,
    )

    ts: List[float] = [0.0]
    interpolants: List[Any] = []
    samples: List[TrajectorySample] = [TrajectorySample(t=0.0, r=r0, v=0.0)]
    max_drift = 0.0
    steps = 0

    def build(terminated_by: TerminationReason) -> IvpSolution:
        dense = OdeSolution(ts, interpolants) if interpolants else None
        return IvpSolution(
            samples=tuple(samples),
            terminal_time=samples[-1].t,
            terminated_by=terminated_by,
            max_energy_drift=max_drift,
            steps=steps,
            nfev=solver.nfev,
            r0=r0,
            time_scale=time_scale,
            _dense=dense,
        )

    while True:
        if steps >= tol.max_steps:
            LOGGER.warning("Integration stopped after %d steps at r=%r (target %r)", steps, solver.y[0] * r0, target_r)
            partial = build(TerminationReason.STEP_LIMIT)
            raise StepLimit(
                f"integration did not reach r={target_r!r} within {tol.max_steps} steps", partial=partial
            )

        solver.max_step = fraction * solver.y[0] ** 1.5
        message = solver.step()
        if solver.status == "failed":
            raise NumericalError(f"integrator failed: {message}")
        steps += 1
        interpolant = solver.dense_output()

        if solver.y[0] <= x_target:
            tau_hit = find_root(lambda s: interpolant(s)[0] - x_target, solver.t_old, solver.t)
            y_hit = interpolant(tau_hit)
            ts.append(tau_hit)
            interpolants.append(interpolant)
            max_drift = max(max_drift, _energy_drift(y_hit))
            samples.append(TrajectorySample(t=tau_hit * time_scale, r=target_r, v=float(y_hit[1]) * speed_scale))
            solution = build(TerminationReason.REACHED_TARGET_RADIUS)
            break

        ts.append(solver.t)
        interpolants.append(interpolant)
        max_drift = max(max_drift, _energy_drift(solver.y))
        samples.append(
            TrajectorySample(t=solver.t * time_scale, r=float(solver.y[0]) * r0, v=float(solver.y[1]) * speed_scale)
        )
        if solver.status == "finished":
            solution = build(TerminationReason.REACHED_FLOOR)
            break

    LOGGER.info(
        "Integrated fall r0=%r -> %r: %s after %d steps, nfev=%d, T=%r s, max energy drift=%.3e",
        r0,
        target_r,
        solution.terminated_by.value,
        solution.steps,
        solution.nfev,
        solution.terminal_time,
        solution.max_energy_drift,
    )
    return solution
