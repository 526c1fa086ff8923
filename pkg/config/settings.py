"""Numerical defaults and presentation settings for radialfall.

All values are compiled in. The command-line surface reads no environment
variables and no configuration files, so overriding a default means building a
new settings object (``Settings(integrator=IntegratorSettings(rel_tol=1e-10))``)
and passing it to the function that needs it.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Any, Dict


@dataclass(frozen=True)
class RootFindingSettings:
    """Tolerances for bracketed scalar root finding."""

    abs_tol: float = 0.0
    rel_tol: float = 1e-15
    max_iterations: int = 200

    def __post_init__(self) -> None:
        if self.abs_tol < 0 or self.rel_tol < 0:
            raise ValueError(
                "Root-finding tolerances must be non-negative: "
                f"abs_tol={self.abs_tol}, rel_tol={self.rel_tol}"
            )
        if self.abs_tol == 0 and self.rel_tol == 0:
            raise ValueError("Root-finding tolerances cannot both be zero.")
        if self.max_iterations < 1:
            raise ValueError(f"max_iterations must be at least 1; received {self.max_iterations}.")


@dataclass(frozen=True)
class IntegratorSettings:
    """Configuration for the adaptive ODE oracle.

    Tolerances apply to the dimensionless state (r / r0, v / sqrt(mu / r0)).
    """

    rel_tol: float = 1e-12
    abs_tol: float = 1e-14
    max_steps: int = 20_000
    max_step_fraction: float = 0.25
    method: str = "DOP853"

    def __post_init__(self) -> None:
        if self.abs_tol < 0 or self.rel_tol < 0:
            raise ValueError(
                "Integrator tolerances must be non-negative: "
                f"abs_tol={self.abs_tol}, rel_tol={self.rel_tol}"
            )
        if self.abs_tol == 0 and self.rel_tol == 0:
            raise ValueError("Integrator tolerances cannot both be zero.")
        if self.max_steps < 1:
            raise ValueError(f"max_steps must be at least 1; received {self.max_steps}.")
        if not 0 < self.max_step_fraction <= 1:
            raise ValueError(
                f"max_step_fraction must lie in (0, 1]; received {self.max_step_fraction}."
            )
        if self.method not in {"DOP853", "RK45"}:
            raise ValueError(f"Unsupported integration method: {self.method!r}")


@dataclass(frozen=True)
class TrajectorySettings:
    """Accuracy contract for inverting the fall-time formula."""

    time_residual_fraction: float = 1e-9
    energy_rel_tol: float = 1e-9


@dataclass(frozen=True)
class OutputSettings:
    """Defaults for CLI report rendering."""

    default_format: str = "human"
    default_precision: int = 9
    human_significant_digits: int = 6
    friendly_duration_threshold_s: float = 120.0

    def __post_init__(self) -> None:
        if self.default_format not in {"human", "csv", "json"}:
            raise ValueError(f"Unknown output format: {self.default_format!r}")
        if not 1 <= self.default_precision <= 17:
            raise ValueError(
                f"default_precision must lie in [1, 17]; received {self.default_precision}."
            )


@dataclass(frozen=True)
class LoggingSettings:
    """Logging configuration applied by the CLI."""

    level: str = "WARNING"
    format: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"


@dataclass(frozen=True)
class Settings:
    """Aggregated settings exposed to the rest of the codebase."""

    root_finding: RootFindingSettings = RootFindingSettings()
    integrator: IntegratorSettings = IntegratorSettings()
    trajectory: TrajectorySettings = TrajectorySettings()
    output: OutputSettings = OutputSettings()
    logging: LoggingSettings = LoggingSettings()


settings = Settings()


def to_dict() -> Dict[str, Any]:
    """Return a dictionary representation of the current settings."""

    return asdict(settings)
