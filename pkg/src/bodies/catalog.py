"""Gravitational constant, point-mass fields and a small celestial-body catalog.

Masses and volumetric mean radii come from the NASA Goddard planetary fact
sheets (nssdc.gsfc.nasa.gov/planetary/factsheet, retrieved 2024) and the IAU
2015 nominal solar radius. They are frozen reference values: the test suite
pins results computed from them.

All quantities are SI (metres, kilograms, seconds).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Tuple

from src.utils.validators import DomainError, ensure_positive

LOGGER = logging.getLogger(__name__)

# CODATA 2018 value of G, m^3 kg^-1 s^-2.
G_NEWTON = 6.67430e-11

# Earth's equatorial radius (WGS84). The catalog uses the mean radius; the
# equatorial one reproduces the often-quoted 896 s collapse time.
EARTH_EQUATORIAL_RADIUS_M = 6.378137e6


class UnknownBody(LookupError):
    """Raised when a body name is not present in the catalog."""

    def __init__(self, name: str, available: Tuple[str, ...]) -> None:
        self.name = name
        self.available = available
        super().__init__(f"unknown body {name!r}; choose one of: {', '.join(available)}")

    def __str__(self) -> str:
        return self.args[0]


def newtonian_constant() -> float:
    """Return the Newtonian constant of gravitation in m^3 kg^-1 s^-2."""

    return G_NEWTON


@dataclass(frozen=True)
class GravityField:
    """Field of a fixed point mass, described by its gravitational parameter mu = G*M."""

    mu: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "mu", ensure_positive("mu", self.mu))

    @classmethod
    def from_mass(cls, mass: float) -> "GravityField":
        """Build the field of a point mass of ``mass`` kilograms."""

        return cls(mu=newtonian_constant() * ensure_positive("mass", mass))

    def rescaled(self, length_factor: float, time_factor: float = 1.0) -> "GravityField":
        """Express the same field in new units.

        Lengths are multiplied by ``length_factor`` and times by ``time_factor``,
        so mu (length^3 / time^2) becomes ``length_factor**3 / time_factor**2``
        times larger. Mass units never matter because only mu enters.
        """

        length_factor = ensure_positive("length_factor", length_factor)
        time_factor = ensure_positive("time_factor", time_factor)
        return GravityField(mu=self.mu * length_factor**3 / time_factor**2)


@dataclass(frozen=True)
class Body:
    """A named, spherically symmetric celestial body."""

    name: str
    mass: float
    mean_radius: float

    def __post_init__(self) -> None:
        if not self.name or not self.name.strip():
            raise DomainError("Body name must be a non-empty identifier.")
        object.__setattr__(self, "mass", ensure_positive("mass", self.mass))
        object.__setattr__(self, "mean_radius", ensure_positive("mean_radius", self.mean_radius))

    @property
    def field(self) -> GravityField:
        return gravity_field_of(self)

    @property
    def surface_gravity(self) -> float:
        """Acceleration at the mean radius, mu / R^2, in m/s^2."""

        return self.field.mu / self.mean_radius**2


def gravity_field_of(body: Body) -> GravityField:
    """Return the point-mass field of ``body`` (mu = G * mass, one multiplication)."""

    return GravityField(mu=newtonian_constant() * body.mass)


_CATALOG: Dict[str, Body] = {
    body.name: body
    for body in (
        Body(name="sun", mass=1.9885e30, mean_radius=6.957e8),
        Body(name="mercury", mass=3.3010e23, mean_radius=2.4397e6),
        Body(name="venus", mass=4.8673e24, mean_radius=6.0518e6),
        Body(name="earth", mass=5.9722e24, mean_radius=6.371e6),
        Body(name="moon", mass=7.346e22, mean_radius=1.7374e6),
        Body(name="mars", mass=6.4169e23, mean_radius=3.3895e6),
        Body(name="jupiter", mass=1.89813e27, mean_radius=6.9911e7),
    )
}


def list_bodies() -> Tuple[Body, ...]:
    """Return every catalog body in catalog order."""

    return tuple(_CATALOG.values())


def lookup_body(name: str) -> Body:
    """Return the catalog entry for ``name`` (case-insensitive)."""

    key = str(name).strip().lower()
    body = _CATALOG.get(key)
    if body is None:
        LOGGER.debug("Body lookup failed for %r", name)
        raise UnknownBody(str(name), tuple(_CATALOG))
    return body

