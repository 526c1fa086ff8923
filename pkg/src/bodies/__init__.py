"""Physical constants and the celestial-body catalog."""

from .catalog import (
    EARTH_EQUATORIAL_RADIUS_M,
    G_NEWTON,
    Body,
    GravityField,
    UnknownBody,
    gravity_field_of,
    list_bodies,
    lookup_body,
    newtonian_constant,
)

__all__ = [
    "EARTH_EQUATORIAL_RADIUS_M",
    "G_NEWTON",
    "Body",
    "GravityField",
    "UnknownBody",
    "gravity_field_of",
    "list_bodies",
    "lookup_body",
    "newtonian_constant",
]
