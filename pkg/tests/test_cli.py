"""Tests for the radialfall command-line interface."""

from __future__ import annotations

import csv
import io
import json
import math

import pytest

from config.settings import IntegratorSettings, Settings
from scripts.radialfall import main as script_main
from src.cli.app import EXIT_NUMERICAL, EXIT_OK, EXIT_USAGE, build_parser, main
from src.cli.reports import (
    BodiesReport,
    CollapseReport,
    CompareReport,
    FallTimeReport,
    PeriodReport,
    TrajectoryReport,
)


def run(argv, config=None):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = main(argv, config=config, stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


def run_json(argv):
    code, out, err = run(argv + ["--format", "json"])
    assert code == EXIT_OK, err
    return json.loads(out)


def run_csv(argv):
    code, out, err = run(argv + ["--format", "csv"])
    assert code == EXIT_OK, err
    return list(csv.reader(io.StringIO(out)))


def test_parser_output_flags_before_subcommand():
    args = build_parser().parse_args(["--format", "json", "collapse", "--body", "earth"])
    assert args.format == "json"
    assert args.body == "earth"


def test_parser_output_flags_after_subcommand():
    args = build_parser().parse_args(["collapse", "--body", "earth", "--precision", "4"])
    assert args.precision == 4
    assert not hasattr(args, "format")


def test_script_launcher_exposes_main():
    assert script_main is main


def test_collapse_earth_human():
    code, out, err = run(["collapse", "--body", "earth"])
    assert code == EXIT_OK
    assert err == ""
    assert out.startswith("collapse time: 894.6")
    assert "min" in out


def test_collapse_earth_json():
    payload = run_json(["collapse", "--mu", "3.986e14", "--radius", "6.371e6"])
    assert payload["scenario"]["mu_m3ps2"] == 3.986e14
    assert payload["scenario"]["body"] is None
    assert payload["result"]["collapse_time_s"] == pytest.approx(896.0, abs=3.0)
    assert payload["result"]["collapse_time_min"] == pytest.approx(15.0, abs=0.2)


def test_collapse_precision():
    payload = run_json(["collapse", "--body", "earth", "--precision", "3"])
    assert payload["result"]["collapse_time_s"] == 895.0


def test_collapse_missing_field_source():
    code, out, err = run(["collapse", "--radius", "1"])
    assert code == EXIT_USAGE
    assert out == ""
    assert "--mu or --body" in err


def test_collapse_unknown_body():
    code, out, err = run(["collapse", "--body", "krypton"])
    assert code == EXIT_USAGE
    assert out == ""
    assert "krypton" in err


def test_fall_time_half_radius_unit_field():
    payload = run_json(["falltime", "--mu", "1", "--r0", "1", "--r1", "0.5"])
    assert payload["result"]["exact_s"] == pytest.approx(0.908914, abs=1e-6)
    assert payload["result"]["impact_speed_mps"] == pytest.approx(math.sqrt(2.0), rel=1e-8)
    assert payload["result"]["impact_speed_unbounded"] is False


def test_fall_time_both_models():
    payload = run_json(["falltime", "--body", "earth", "--r1", "6370996.952", "--model", "both"])
    result = payload["result"]
    assert result["exact_s"] == pytest.approx(0.788, abs=1e-3)
    assert result["constant_g_s"] == pytest.approx(0.788, abs=1e-3)
    assert result["relative_discrepancy"] <= 1e-7


def test_fall_time_no_fall():
    payload = run_json(["falltime", "--mu", "1", "--r0", "10", "--r1", "10"])
    assert payload["result"]["exact_s"] == 0.0
    assert payload["result"]["impact_speed_mps"] == 0.0


def test_fall_time_to_centre_reports_unbounded_speed():
    code, out, _ = run(["falltime", "--body", "earth", "--r1", "0"])
    assert code == EXIT_OK
    assert "unbounded" in out


def test_fall_time_r1_above_r0():
    code, out, err = run(["falltime", "--mu", "1", "--r0", "10", "--r1", "20"])
    assert code == EXIT_USAGE
    assert out == ""
    assert err.startswith("radialfall: error:")
    assert "r1 exceeds r0" in err
    assert err.count("\n") == 1


def test_fall_time_body_and_mu_are_exclusive():
    code, out, err = run(["falltime", "--body", "earth", "--mu", "1", "--r1", "0"])
    assert code == EXIT_USAGE
    assert out == ""
    assert err.count("\n") == 1


def test_trajectory_csv_two_samples():
    rows = run_csv(["trajectory", "--r0", "1", "--mu", "1", "--samples", "2", "--floor", "0.5"])
    assert rows[0] == ["t_s", "r_m", "v_mps"]
    assert rows[1] == ["0", "1", "0"]
    assert float(rows[2][0]) == pytest.approx(0.908914, abs=1e-6)
    assert float(rows[2][1]) == 0.5
    assert float(rows[2][2]) == pytest.approx(-math.sqrt(2.0), rel=1e-8)


def test_trajectory_csv_to_centre():
    rows = run_csv(["trajectory", "--body", "earth", "--samples", "10"])
    assert len(rows) == 11
    assert rows[-1][1] == "0"
    assert rows[-1][2] == "-inf"


def test_trajectory_json_samples():
    payload = run_json(["trajectory", "--r0", "2", "--mu", "1", "--samples", "5", "--floor", "0.1"])
    samples = payload["samples"]
    assert len(samples) == 5
    radii = [sample["r_m"] for sample in samples]
    assert radii == sorted(radii, reverse=True)
    assert payload["oracle"] is None


def test_trajectory_oracle_columns():
    rows = run_csv(
        ["trajectory", "--r0", "1", "--mu", "1", "--samples", "20", "--floor", "0.1", "--oracle"]
    )
    assert rows[0] == ["t_s", "r_m", "v_mps", "r_oracle_m", "rel_dev"]
    assert len(rows) == 21
    assert max(float(row[4]) for row in rows[1:]) <= 1e-6


def test_trajectory_oracle_needs_floor():
    code, out, err = run(["trajectory", "--r0", "1", "--mu", "1", "--samples", "5", "--oracle"])
    assert code == EXIT_USAGE
    assert out == ""
    assert "singular" in err


def test_trajectory_oracle_step_limit_is_numerical_failure():
    config = Settings(integrator=IntegratorSettings(max_steps=1))
    code, out, err = run(
        ["trajectory", "--r0", "1", "--mu", "1", "--samples", "5", "--floor", "0.01", "--oracle"],
        config=config,
    )
    assert code == EXIT_NUMERICAL
    assert out == ""
    assert "steps" in err


def test_trajectory_oracle_near_centre_stays_within_tolerance():
    rows = run_csv(
        ["trajectory", "--r0", "1", "--mu", "1", "--samples", "50", "--floor", "1e-6", "--oracle"]
    )
    assert len(rows) == 51
    assert float(rows[-1][1]) == 1e-6
    assert float(rows[-1][3]) == 1e-6
    assert max(float(row[4]) for row in rows[1:]) <= 1e-6


def test_trajectory_oracle_floor_beyond_resolution_is_numerical_failure():
    code, out, err = run(
        ["trajectory", "--r0", "1", "--mu", "1", "--samples", "50", "--floor", "1e-10", "--oracle"]
    )
    assert code == EXIT_NUMERICAL
    assert out == ""
    assert err.count("\n") == 1
    assert "reached_floor" in err


def test_trajectory_rejects_underflowing_fall_time():
    code, out, err = run(["trajectory", "--r0", "1e-300", "--mu", "1", "--samples", "10"])
    assert code == EXIT_USAGE
    assert out == ""
    assert "underflows" in err


@pytest.mark.parametrize("samples", ["1", "0"])
def test_trajectory_rejects_too_few_samples(samples):
    code, out, _ = run(["trajectory", "--r0", "1", "--mu", "1", "--samples", samples])
    assert code == EXIT_USAGE
    assert out == ""


def test_compare_eps_over_six():
    payload = run_json(["compare", "--mu", "1", "--r0", "1", "--eps-list", "1e-8,1e-6,1e-4,1"])
    rows = {row["eps"]: row for row in payload["result"]}
    assert rows[1e-6]["error_over_eps"] == pytest.approx(0.1667, abs=1e-4)
    assert rows[1.0]["rel_error"] == pytest.approx(0.2732, abs=1e-4)


def test_compare_csv_header():
    rows = run_csv(["compare", "--body", "earth", "--eps-list", "1e-6"])
    assert rows[0] == ["eps", "h_m", "t_exact_s", "t_constant_g_s", "rel_error", "error_over_eps"]
    assert len(rows) == 2


@pytest.mark.parametrize("eps", ["0", "1.5", "-1e-3"])
def test_compare_rejects_eps_outside_unit_interval(eps):
    code, _, err = run(["compare", "--mu", "1", "--r0", "1", "--eps-list", eps])
    assert code == EXIT_USAGE
    assert "eps" in err


def test_compare_rejects_non_numeric_list():
    code, out, _ = run(["compare", "--mu", "1", "--r0", "1", "--eps-list", "a,b"])
    assert code == EXIT_USAGE
    assert out == ""


def test_period_circular_ratio():
    payload = run_json(["period", "--circular", "--r", "6.371e6", "--body", "earth"])
    assert payload["result"]["period_to_collapse_ratio"] == pytest.approx(4 * math.sqrt(2), rel=1e-8)
    assert payload["result"]["eccentricity"] == 0.0


def test_period_degenerate_ellipse():
    payload = run_json(["period", "--ellipse", "--rmax", "1", "--rmin", "0", "--mu", "1"])
    result = payload["result"]
    assert result["half_period_to_collapse_ratio"] == pytest.approx(1.0, rel=1e-8)
    assert result["eccentricity"] == 1.0


def test_period_flat_circle_matches_circular():
    circle = run_json(["period", "--circular", "--r", "7e6", "--body", "earth"])
    ellipse = run_json(["period", "--ellipse", "--rmax", "7e6", "--rmin", "7e6", "--body", "earth"])
    assert ellipse["result"]["period_s"] == circle["result"]["period_s"]


def test_period_limit_check_table():
    rows = run_csv(
        ["period", "--ellipse", "--rmax", "6371000", "--rmin", "0", "--body", "earth", "--limit-check", "1e-2,1e-4"]
    )
    assert rows[0] == ["delta", "ratio"]
    for delta, ratio in rows[1:]:
        assert 1.0 <= float(ratio) <= 1.0 + 2 * float(delta)


def test_period_circular_needs_radius():
    code, out, err = run(["period", "--circular", "--mu", "1"])
    assert code == EXIT_USAGE
    assert "--r" in err


def test_period_shape_is_required():
    code, out, _ = run(["period", "--r", "1", "--mu", "1"])
    assert code == EXIT_USAGE
    assert out == ""


def test_bodies_json():
    payload = run_json(["bodies", "list"])
    names = {row["name"] for row in payload["result"]}
    assert {"earth", "moon", "sun"} <= names
    assert payload["scenario"]["count"] == len(payload["result"])


def test_bodies_mu_is_g_times_mass():
    payload = run_json(["bodies", "list"])
    for row in payload["result"]:
        assert row["mu_m3ps2"] == pytest.approx(6.67430e-11 * row["mass_kg"], rel=1e-8)
    earth = next(row for row in payload["result"] if row["name"] == "earth")
    assert earth["surface_g_mps2"] == pytest.approx(9.8, abs=0.05)
    assert earth["collapse_time_s"] == pytest.approx(896.0, abs=3.0)


def test_bodies_csv():
    rows = run_csv(["bodies", "list"])
    assert rows[0][:3] == ["name", "mass_kg", "radius_m"]


def test_bodies_action_required():
    code, out, _ = run(["bodies"])
    assert code == EXIT_USAGE
    assert out == ""


@pytest.mark.parametrize(
    "argv",
    [
        ["collapse", "--body", "earth", "--format", "json"],
        ["trajectory", "--r0", "1", "--mu", "1", "--samples", "8", "--floor", "0.2", "--format", "csv"],
        ["bodies", "list"],
    ],
)
def test_output_is_repeatable(argv):
    assert run(argv) == run(argv)


def test_missing_subcommand_is_usage_error():
    code, out, err = run([])
    assert code == EXIT_USAGE
    assert out == ""
    assert err.startswith("radialfall: error:")


@pytest.mark.parametrize(
    "argv",
    [
        ["falltime", "--mu", "1e-320", "--r0", "1e300", "--r1", "0"],
        ["period", "--circular", "--r", "1e300", "--mu", "1e-300"],
    ],
)
def test_overflow_is_numerical_failure(argv):
    code, out, err = run(argv)
    assert code == EXIT_NUMERICAL
    assert out == ""
    assert err.count("\n") == 1
    assert err.startswith("radialfall: error: result out of floating-point range")


@pytest.mark.parametrize("argv", [["--help"], ["trajectory", "--help"]])
def test_help_goes_to_given_stdout(argv, capsys):
    stdout, stderr = io.StringIO(), io.StringIO()
    assert main(argv, stdout=stdout, stderr=stderr) == EXIT_OK
    assert stdout.getvalue().startswith("usage: radialfall")
    assert stderr.getvalue() == ""
    assert capsys.readouterr().out == ""


def test_main_writes_to_sys_stdout(capsys):
    """Without explicit streams the report goes to sys.stdout."""
    assert main(["collapse", "--mu", "0.5", "--radius", "1", "--format", "csv"]) == EXIT_OK
    captured = capsys.readouterr()
    assert captured.out.splitlines()[0] == "collapse_time_s,collapse_time_min"
    assert float(captured.out.splitlines()[1].split(",")[0]) == pytest.approx(math.pi / 2, rel=1e-8)


def test_main_errors_go_to_sys_stderr(capsys):
    assert main(["collapse", "--mu", "-1", "--radius", "1"]) == EXIT_USAGE
    captured = capsys.readouterr()
    assert captured.out == ""
    assert captured.err.startswith("radialfall: error: mu must be positive")


@pytest.mark.parametrize(
    "model,argv",
    [
        (CollapseReport, ["collapse", "--body", "moon"]),
        (FallTimeReport, ["falltime", "--body", "moon", "--r1", "0", "--model", "both"]),
        (TrajectoryReport, ["trajectory", "--body", "moon", "--samples", "4"]),
        (CompareReport, ["compare", "--body", "moon", "--eps-list", "1e-3"]),
        (PeriodReport, ["period", "--circular", "--r", "2e6", "--body", "moon"]),
        (BodiesReport, ["bodies", "list"]),
    ],
)
def test_json_output_validates_against_model(model, argv):
    payload = run_json(argv)
    assert isinstance(model.model_validate(payload), model)
    assert set(model.model_json_schema()["properties"]) == set(payload)
