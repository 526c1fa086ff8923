"""Tolerance contract shared by the root finder and the integrator."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, model_validator

from config.settings import Settings, settings as default_settings


class ToleranceConfig(BaseModel):
    """Absolute/relative tolerances plus iteration and step caps."""

    abs_tol: float = Field(0.0, ge=0.0, description="Absolute tolerance, in the units of the solved variable.")
    rel_tol: float = Field(1e-12, ge=0.0, description="Relative tolerance (dimensionless).")
    max_iterations: int = Field(200, ge=1, description="Iteration cap for root finding.")
    max_steps: int = Field(20_000, ge=1, description="Accepted-step cap for integration.")

    model_config = ConfigDict(extra="forbid", frozen=True)

    @model_validator(mode="after")
    def _not_both_zero(self) -> "ToleranceConfig":
        if self.abs_tol == 0 and self.rel_tol == 0:
            raise ValueError("abs_tol and rel_tol cannot both be zero")
        return self

    @classmethod
    def for_root_finding(cls, config: Settings | None = None) -> "ToleranceConfig":
        """Defaults for bracketed root finding."""

        root = (config or default_settings).root_finding
        return cls(abs_tol=root.abs_tol, rel_tol=root.rel_tol, max_iterations=root.max_iterations)

    @classmethod
    def for_integration(cls, config: Settings | None = None) -> "ToleranceConfig":
        """Defaults for the ODE oracle (tolerances on the dimensionless state)."""

        integ = (config or default_settings).integrator
        return cls(abs_tol=integ.abs_tol, rel_tol=integ.rel_tol, max_steps=integ.max_steps)

    def tightened(self, factor: float) -> "ToleranceConfig":
        """Return a copy with both tolerances divided by ``factor``."""

        return self.model_copy(update={"abs_tol": self.abs_tol / factor, "rel_tol": self.rel_tol / factor})
