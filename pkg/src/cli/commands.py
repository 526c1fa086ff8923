"""Subcommand handlers: parsed arguments in, report models out."""

from __future__ import annotations

import argparse
import logging
from typing import List, Optional, Tuple

from config.settings import Settings
from src.bodies.catalog import GravityField, list_bodies, lookup_body
from src.cli.reports import (
    BodiesReport,
    BodiesScenario,
    BodyRow,
    CollapseReport,
    CollapseResult,
    CollapseScenario,
    CompareReport,
    CompareRow,
    CompareScenario,
    FallTimeReport,
    FallTimeResult,
    FallTimeScenario,
    LimitRow,
    OracleSummary,
    PeriodReport,
    PeriodResult,
    PeriodScenario,
    SampleRecord,
    TrajectoryReport,
    TrajectoryScenario,
)
from src.freefall.core import collapse_time, fall, fall_time_constant_g, gravitational_acceleration
from src.freefall.models import FallScenario
from src.freefall.reconciliation import approximation_error, compare_drop
from src.freefall.trajectory import sample_trajectory
from src.numerics.errors import NumericalError
from src.numerics.integrator import TerminationReason, integrate_radial_fall
from src.orbits.periods import EllipseGeometry, degenerate_limit_check, elliptical_period
from src.utils.validators import DomainError

LOGGER = logging.getLogger(__name__)


def _resolve_field(args: argparse.Namespace) -> Tuple[GravityField, Optional[str]]:
    body_name = getattr(args, "body", None)
    if body_name is not None:
        body = lookup_body(body_name)
        return body.field, body.name
    if getattr(args, "mu", None) is None:
        raise DomainError("one of --mu or --body is required")
    return GravityField(mu=args.mu), None


def _resolve_radius(args: argparse.Namespace, attr: str, flag: str) -> float:
    value = getattr(args, attr, None)
    if value is not None:
        return value
    if getattr(args, "body", None) is not None:
        return lookup_body(args.body).mean_radius
    raise DomainError(f"{flag} is required unless --body is given")


def cmd_falltime(args: argparse.Namespace, config: Settings) -> FallTimeReport:
    """Exact and/or constant-g fall time between two radii."""

    field, body = _resolve_field(args)
    r0 = _resolve_radius(args, "r0", "--r0")
    scenario = FallScenario(r0=r0, r1=args.r1, field=field)

    result = fall(scenario)
    exact = result.elapsed if args.model in {"exact", "both"} else None
    constant_g = None
    discrepancy = None
    if args.model in {"constant-g", "both"}:
        constant_g = fall_time_constant_g(scenario.height, gravitational_acceleration(r0, field))
    if args.model == "both" and scenario.height > 0:
        discrepancy = approximation_error(r0, scenario.height, field)

    return FallTimeReport(
        scenario=FallTimeScenario(body=body, mu_m3ps2=field.mu, r0_m=r0, r1_m=scenario.r1, model=args.model),
        result=FallTimeResult(
            exact_s=exact,
            constant_g_s=constant_g,
            relative_discrepancy=discrepancy,
            impact_speed_mps=result.impact_speed,
            impact_speed_unbounded=result.unbounded,
        ),
    )


def cmd_collapse(args: argparse.Namespace, config: Settings) -> CollapseReport:
    """Time to fall from a radius to the centre."""

    field, body = _resolve_field(args)
    radius = _resolve_radius(args, "radius", "--radius")
    t_collapse = collapse_time(radius, field)
    return CollapseReport(
        scenario=CollapseScenario(body=body, mu_m3ps2=field.mu, radius_m=radius),
        result=CollapseResult(collapse_time_s=t_collapse, collapse_time_min=t_collapse / 60.0),
    )


def cmd_trajectory(args: argparse.Namespace, config: Settings) -> TrajectoryReport:
    """Tabulated r(t), v(t), optionally alongside the ODE oracle."""

    field, body = _resolve_field(args)
    r0 = _resolve_radius(args, "r0", "--r0")
    if args.oracle and args.floor <= 0:
        raise DomainError("--oracle needs --floor > 0: the equation of motion is singular at r = 0")

    samples = sample_trajectory(r0, field, args.samples, args.floor, config=config)
    records: List[SampleRecord] = []
    summary = None
    if args.oracle:
        solution = integrate_radial_fall(r0, field, args.floor, config=config)
        if solution.terminated_by is not TerminationReason.REACHED_TARGET_RADIUS:
            raise NumericalError(
                f"integration ended ({solution.terminated_by.value}) at r={solution.samples[-1].r!r} "
                f"before reaching --floor {args.floor!r}; the floor is too close to the centre to resolve"
            )
        max_dev = 0.0
        for index, sample in enumerate(samples):
            if index == len(samples) - 1:
                # r is ill-conditioned in t at the floor, so the arrival time is compared instead.
                r_oracle = solution.samples[-1].r
                deviation = abs(solution.terminal_time - sample.t) / sample.t
            else:
                r_oracle = solution.radius_at(min(sample.t, solution.terminal_time))
                deviation = abs(r_oracle - sample.r) / sample.r
            max_dev = max(max_dev, deviation)
            records.append(
                SampleRecord(t_s=sample.t, r_m=sample.r, v_mps=sample.v, r_oracle_m=r_oracle, rel_dev=deviation)
            )
        summary = OracleSummary(
            terminal_time_s=solution.terminal_time,
            steps=solution.steps,
            max_energy_drift=solution.max_energy_drift,
            max_rel_dev=max_dev,
        )
    else:
        records = [
            SampleRecord(t_s=sample.t, r_m=sample.r, v_mps=sample.v, v_unbounded=sample.unbounded)
            for sample in samples
        ]

    return TrajectoryReport(
        scenario=TrajectoryScenario(
            body=body, mu_m3ps2=field.mu, r0_m=r0, floor_m=args.floor, samples=args.samples, oracle=args.oracle
        ),
        samples=records,
        oracle=summary,
    )


def cmd_compare(args: argparse.Namespace, config: Settings) -> CompareReport:
    """Exact versus constant-g times for drops of eps * r0."""

    field, body = _resolve_field(args)
    r0 = _resolve_radius(args, "r0", "--r0")
    rows = []
    for eps in args.eps_list:
        if not 0 < eps <= 1:
            raise DomainError(f"eps must lie in (0, 1]; received {eps!r}")
        comparison = compare_drop(r0, eps * r0, field)
        rows.append(
            CompareRow(
                eps=eps,
                h_m=comparison.height,
                t_exact_s=comparison.exact,
                t_constant_g_s=comparison.constant_g,
                rel_error=comparison.relative_error,
                error_over_eps=comparison.relative_error / eps,
            )
        )
    return CompareReport(
        scenario=CompareScenario(body=body, mu_m3ps2=field.mu, r0_m=r0, eps_list=list(args.eps_list)),
        result=rows,
    )


def cmd_period(args: argparse.Namespace, config: Settings) -> PeriodReport:
    """Circular or elliptical period, optionally with the degenerate-limit table."""

    field, body = _resolve_field(args)
    if args.circular:
        if args.r is None:
            raise DomainError("--circular needs --r")
        geometry = EllipseGeometry.circle(args.r)
    else:
        if args.rmax is None or args.rmin is None:
            raise DomainError("--ellipse needs both --rmax and --rmin")
        geometry = EllipseGeometry(r_max=args.rmax, r_min=args.rmin)

    period = elliptical_period(geometry, field)
    t_collapse = collapse_time(geometry.r_max, field)
    limit_rows = []
    if args.limit_check:
        limit_rows = [
            LimitRow(delta=delta, ratio=ratio)
            for delta, ratio in degenerate_limit_check(geometry.r_max, field, args.limit_check)
        ]

    return PeriodReport(
        scenario=PeriodScenario(
            body=body,
            mu_m3ps2=field.mu,
            orbit="circular" if args.circular else "ellipse",
            r_max_m=geometry.r_max,
            r_min_m=geometry.r_min,
            limit_check=list(args.limit_check or []),
        ),
        result=PeriodResult(
            period_s=period,
            half_period_s=0.5 * period,
            eccentricity=geometry.eccentricity,
            semi_major_axis_m=geometry.semi_major_axis,
            collapse_time_s=t_collapse,
            period_to_collapse_ratio=period / t_collapse,
            half_period_to_collapse_ratio=0.5 * period / t_collapse,
            limit_check=limit_rows,
        ),
    )


def cmd_bodies(args: argparse.Namespace, config: Settings) -> BodiesReport:
    """Catalog listing with derived field quantities."""

    rows = [
        BodyRow(
            name=body.name,
            mass_kg=body.mass,
            radius_m=body.mean_radius,
            mu_m3ps2=body.field.mu,
            surface_g_mps2=body.surface_gravity,
            collapse_time_s=collapse_time(body.mean_radius, body.field),
        )
        for body in list_bodies()
    ]
    return BodiesReport(scenario=BodiesScenario(count=len(rows)), result=rows)
