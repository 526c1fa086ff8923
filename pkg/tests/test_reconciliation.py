"""Tests for the agreement between the exact and constant-g drop times."""

from __future__ import annotations

import math

import numpy as np
import pytest

from src.bodies import GravityField, lookup_body
from src.freefall import (
    FallScenario,
    approximation_error,
    compare_drop,
    drop_from_surface,
    fall_time_constant_g,
    fall_time_exact,
)
from src.utils.validators import DomainError

UNIT_FIELD = GravityField(mu=1.0)


@pytest.mark.parametrize("eps", [1e-4, 1e-6, 1e-8])
def test_approximation_error_leading_term_is_eps_over_six(eps):
    assert approximation_error(1.0, eps, UNIT_FIELD) / eps == pytest.approx(1 / 6, abs=0.01)


def test_approximation_error_one_in_a_million():
    error = approximation_error(1.0, 1e-6, UNIT_FIELD)
    assert error == pytest.approx(1e-6 / 6, rel=0.05)


def test_approximation_error_drop_to_centre():
    assert approximation_error(1.0, 1.0, UNIT_FIELD) == pytest.approx(4 / math.pi - 1, abs=1e-4)
    assert approximation_error(1.0, 1.0, UNIT_FIELD) == pytest.approx(0.2732, abs=1e-4)


def test_approximation_error_coin_drop_from_ceiling():
    earth = lookup_body("earth")
    assert approximation_error(earth.mean_radius, 3.048, earth.field) <= 1e-7


def test_approximation_error_monotone_in_eps():
    errors = [approximation_error(1.0, eps, UNIT_FIELD) for eps in np.geomspace(1e-8, 1.0, 60)]
    assert all(a < b for a, b in zip(errors, errors[1:]))


@pytest.mark.parametrize("power", range(4, 20))
def test_approximation_error_bounded_by_series_terms(power):
    eps = 2.0**-power
    ratio = approximation_error(1.0, eps, UNIT_FIELD) / eps
    assert 1 / 6 - eps <= ratio <= 1 / 6 + eps


def test_approximation_error_independent_of_scale():
    earth = lookup_body("earth")
    small = approximation_error(1.0, 1e-3, UNIT_FIELD)
    large = approximation_error(earth.mean_radius, 1e-3 * earth.mean_radius, earth.field)
    assert small == pytest.approx(large, rel=1e-9)


@pytest.mark.parametrize("h", [0.0, -1.0, 2.0, float("nan")])
def test_approximation_error_rejects_invalid_heights(h):
    with pytest.raises(DomainError):
        approximation_error(1.0, h, UNIT_FIELD)


def test_compare_drop_fields():
    earth = lookup_body("earth")
    r0 = earth.mean_radius
    comparison = compare_drop(r0, 3.048, earth.field)
    assert comparison.height == 3.048
    assert comparison.eps == pytest.approx(3.048 / r0)
    assert comparison.constant_g == pytest.approx(
        fall_time_constant_g(3.048, earth.field.mu / r0**2), rel=1e-15
    )
    assert comparison.exact == pytest.approx(
        fall_time_exact(FallScenario.from_drop(r0, 3.048, earth.field)), rel=1e-9
    )
    assert comparison.constant_g > comparison.exact


def test_compare_drop_agrees_with_schoolbook_constant():
    earth = lookup_body("earth")
    comparison = compare_drop(earth.mean_radius, 3.048, earth.field)
    assert comparison.exact == pytest.approx(0.788, abs=1e-3)


def test_drop_from_surface_release_point_is_above_surface():
    earth = lookup_body("earth")
    comparison = drop_from_surface(earth, 100.0)
    assert comparison.r0 == earth.mean_radius + 100.0
    assert comparison.height == 100.0


def test_drop_from_surface_moon_drop():
    moon = lookup_body("moon")
    comparison = drop_from_surface(moon, 1.0)
    assert comparison.constant_g == pytest.approx(math.sqrt(2.0 / moon.surface_gravity), rel=1e-5)
    assert comparison.relative_error < 1e-6


@pytest.mark.parametrize("height", [0.0, -3.0])
def test_drop_from_surface_rejects_non_positive_height(height):
    with pytest.raises(DomainError):
        drop_from_surface(lookup_body("earth"), height)
