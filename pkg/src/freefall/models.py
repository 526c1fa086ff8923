"""Records describing a radial fall and its results."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from src.bodies.catalog import GravityField
from src.utils.validators import DomainError, ensure_at_most, ensure_non_negative, ensure_positive


@dataclass(frozen=True)
class FallScenario:
    """Release from rest at ``r0`` towards ``r1`` in the field of a point mass."""

    r0: float
    r1: float
    field: GravityField

    def __post_init__(self) -> None:
        r0 = ensure_positive("r0", self.r0)
        r1 = ensure_non_negative("r1", self.r1)
        ensure_at_most("r1", r1, "r0", r0)
        if not isinstance(self.field, GravityField):
            raise DomainError(f"field must be a GravityField; received {type(self.field).__name__}.")
        object.__setattr__(self, "r0", r0)
        object.__setattr__(self, "r1", r1)

    @classmethod
    def from_drop(cls, r0: float, height: float, field: GravityField) -> "FallScenario":
        """Scenario for a drop of ``height`` metres starting at ``r0``."""

        height = ensure_non_negative("height", height)
        ensure_at_most("height", height, "r0", r0)
        return cls(r0=r0, r1=r0 - height, field=field)

    @property
    def k(self) -> float:
        """Ratio K = r1 / r0, in [0, 1]."""

        return self.r1 / self.r0

    @property
    def height(self) -> float:
        return self.r0 - self.r1

    def rescaled(self, length_factor: float) -> "FallScenario":
        """Same scenario with lengths multiplied by ``length_factor``."""

        return FallScenario(
            r0=self.r0 * length_factor,
            r1=self.r1 * length_factor,
            field=self.field.rescaled(length_factor),
        )


@dataclass(frozen=True)
class FallResult:
    """Elapsed time and arrival speed of a fall.

    ``impact_speed`` is None and ``unbounded`` is True when the target is the
    centre itself, where the speed diverges.
    """

    elapsed: float
    impact_speed: Optional[float]
    unbounded: bool = False

    def __post_init__(self) -> None:
        if self.elapsed < 0 or not math.isfinite(self.elapsed):
            raise DomainError(f"elapsed must be finite and non-negative; received {self.elapsed!r}.")
        if self.unbounded != (self.impact_speed is None):
            raise DomainError("impact_speed must be None exactly when the speed is unbounded.")


@dataclass(frozen=True)
class TrajectorySample:
    """One point (t, r, v) along a radial fall.

    ``v`` is the radial velocity (non-positive while falling) and is None at
    r = 0, where it is unbounded.
    """

    t: float
    r: float
    v: Optional[float]

    @property
    def unbounded(self) -> bool:
        return self.v is None

    def specific_energy(self, field: GravityField) -> float:
        """v^2/2 - mu/r; constant along a fall."""

        if self.v is None or self.r <= 0:
            raise DomainError("specific energy is undefined at the centre.")
        return 0.5 * self.v * self.v - field.mu / self.r
