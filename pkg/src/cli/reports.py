"""Report models emitted by the radialfall CLI.

The JSON output of every subcommand is ``Report.model_dump`` of one of the
models below, so ``model_json_schema()`` is the documented schema. Each report
also knows how to lay itself out as a CSV table and as human-readable lines.
"""

from __future__ import annotations

from typing import Any, List, Literal, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from src.utils.formatters import format_duration, format_significant

Cell = Union[float, int, str, None]
Table = Tuple[List[str], List[List[Cell]]]


class OutputFormat(BaseModel):
    """How a report is rendered."""

    kind: Literal["human", "csv", "json"] = "human"
    precision: int = Field(9, ge=1, le=17, description="Significant digits for csv/json numbers.")

    model_config = ConfigDict(extra="forbid", frozen=True)


class _Model(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class FieldEcho(_Model):
    """Source of the gravitational parameter."""

    body: Optional[str] = None
    mu_m3ps2: float


# ---------------------------------------------------------------------------
# falltime
# ---------------------------------------------------------------------------


class FallTimeScenario(FieldEcho):
    r0_m: float
    r1_m: float
    model: Literal["exact", "constant-g", "both"]


class FallTimeResult(_Model):
    exact_s: Optional[float] = None
    constant_g_s: Optional[float] = None
    relative_discrepancy: Optional[float] = None
    impact_speed_mps: Optional[float] = None
    impact_speed_unbounded: bool = False


class FallTimeReport(_Model):
    scenario: FallTimeScenario
    result: FallTimeResult

    def table(self) -> Table:
        r = self.result
        header = ["exact_s", "constant_g_s", "relative_discrepancy", "impact_speed_mps"]
        speed: Cell = "inf" if r.impact_speed_unbounded else r.impact_speed_mps
        return header, [[r.exact_s, r.constant_g_s, r.relative_discrepancy, speed]]

    def human(self, digits: int, threshold: float) -> List[str]:
        r = self.result
        lines = []
        if r.exact_s is not None:
            lines.append(_time_line("fall time (exact)", r.exact_s, digits, threshold))
        if r.constant_g_s is not None:
            lines.append(_time_line("fall time (constant g)", r.constant_g_s, digits, threshold))
        if self.scenario.model == "both":
            discrepancy = (
                "undefined (no drop)"
                if r.relative_discrepancy is None
                else format_significant(r.relative_discrepancy, digits)
            )
            lines.append(f"relative discrepancy: {discrepancy}")
        if r.impact_speed_unbounded:
            lines.append("impact speed: unbounded (target is the centre)")
        elif r.impact_speed_mps is not None:
            lines.append(f"impact speed: {format_significant(r.impact_speed_mps, digits)} m/s")
        return lines


# ---------------------------------------------------------------------------
# collapse
# ---------------------------------------------------------------------------


class CollapseScenario(FieldEcho):
    radius_m: float


class CollapseResult(_Model):
    collapse_time_s: float
    collapse_time_min: float


class CollapseReport(_Model):
    scenario: CollapseScenario
    result: CollapseResult

    def table(self) -> Table:
        return ["collapse_time_s", "collapse_time_min"], [
            [self.result.collapse_time_s, self.result.collapse_time_min]
        ]

    def human(self, digits: int, threshold: float) -> List[str]:
        return [_time_line("collapse time", self.result.collapse_time_s, digits, threshold)]


# ---------------------------------------------------------------------------
# trajectory
# ---------------------------------------------------------------------------


class TrajectoryScenario(FieldEcho):
    r0_m: float
    floor_m: float
    samples: int
    oracle: bool = False


class SampleRecord(_Model):
    t_s: float
    r_m: float
    v_mps: Optional[float] = Field(None, description="Radial velocity; null when unbounded (r = 0).")
    v_unbounded: bool = False
    r_oracle_m: Optional[float] = None
    rel_dev: Optional[float] = None


class OracleSummary(_Model):
    terminal_time_s: float
    steps: int
    max_energy_drift: float
    max_rel_dev: float


class TrajectoryReport(_Model):
    scenario: TrajectoryScenario
    samples: List[SampleRecord]
    oracle: Optional[OracleSummary] = None

    def table(self) -> Table:
        header = ["t_s", "r_m", "v_mps"]
        if self.scenario.oracle:
            header += ["r_oracle_m", "rel_dev"]
        rows: List[List[Cell]] = []
        for sample in self.samples:
            row: List[Cell] = [sample.t_s, sample.r_m, "-inf" if sample.v_unbounded else sample.v_mps]
            if self.scenario.oracle:
                row += [sample.r_oracle_m, sample.rel_dev]
            rows.append(row)
        return header, rows

    def human(self, digits: int, threshold: float) -> List[str]:
        header, rows = self.table()
        lines = ["  ".join(f"{name:>14}" for name in header)]
        for row in rows:
            lines.append("  ".join(f"{_cell(value, digits):>14}" for value in row))
        if self.oracle is not None:
            lines.append(
                f"oracle: {self.oracle.steps} steps, max relative deviation "
                f"{format_significant(self.oracle.max_rel_dev, 3)}"
            )
        return lines


# ---------------------------------------------------------------------------
# compare
# ---------------------------------------------------------------------------


class CompareScenario(FieldEcho):
    r0_m: float
    eps_list: List[float]


class CompareRow(_Model):
    eps: float
    h_m: float
    t_exact_s: float
    t_constant_g_s: float
    rel_error: float
    error_over_eps: float


class CompareReport(_Model):
    scenario: CompareScenario
    result: List[CompareRow]

    def table(self) -> Table:
        header = ["eps", "h_m", "t_exact_s", "t_constant_g_s", "rel_error", "error_over_eps"]
        return header, [[getattr(row, name) for name in header] for row in self.result]

    def human(self, digits: int, threshold: float) -> List[str]:
        header, rows = self.table()
        lines = ["  ".join(f"{name:>15}" for name in header)]
        lines += ["  ".join(f"{_cell(value, digits):>15}" for value in row) for row in rows]
        return lines


# ---------------------------------------------------------------------------
# period
# ---------------------------------------------------------------------------


class PeriodScenario(FieldEcho):
    orbit: Literal["circular", "ellipse"]
    r_max_m: float
    r_min_m: float
    limit_check: List[float] = Field(default_factory=list)


class LimitRow(_Model):
    delta: float
    ratio: float


class PeriodResult(_Model):
    period_s: float
    half_period_s: float
    eccentricity: float
    semi_major_axis_m: float
    collapse_time_s: float = Field(description="Collapse time from r_max.")
    period_to_collapse_ratio: float
    half_period_to_collapse_ratio: float
    limit_check: List[LimitRow] = Field(default_factory=list)


class PeriodReport(_Model):
    scenario: PeriodScenario
    result: PeriodResult

    def table(self) -> Table:
        r = self.result
        if r.limit_check:
            return ["delta", "ratio"], [[row.delta, row.ratio] for row in r.limit_check]
        header = [
            "period_s",
            "half_period_s",
            "eccentricity",
            "collapse_time_s",
            "period_to_collapse_ratio",
        ]
        return header, [[r.period_s, r.half_period_s, r.eccentricity, r.collapse_time_s, r.period_to_collapse_ratio]]

    def human(self, digits: int, threshold: float) -> List[str]:
        r = self.result
        lines = [
            _time_line("orbital period", r.period_s, digits, threshold),
            _time_line("half period", r.half_period_s, digits, threshold),
            f"eccentricity: {format_significant(r.eccentricity, digits)}",
            _time_line("collapse time from r_max", r.collapse_time_s, digits, threshold),
            f"period / collapse time: {format_significant(r.period_to_collapse_ratio, digits)}",
        ]
        if r.limit_check:
            lines.append(f"{'delta':>12}  {'half-period / T_C':>18}")
            lines += [
                f"{format_significant(row.delta, digits):>12}  {format_significant(row.ratio, digits):>18}"
                for row in r.limit_check
            ]
        return lines


# ---------------------------------------------------------------------------
# bodies
# ---------------------------------------------------------------------------


class BodiesScenario(_Model):
    catalog: Literal["builtin"] = "builtin"
    count: int


class BodyRow(_Model):
    name: str
    mass_kg: float
    radius_m: float
    mu_m3ps2: float
    surface_g_mps2: float
    collapse_time_s: float


class BodiesReport(_Model):
    scenario: BodiesScenario
    result: List[BodyRow]

    def table(self) -> Table:
        header = list(BodyRow.model_fields)
        return header, [[getattr(row, name) for name in header] for row in self.result]

    def human(self, digits: int, threshold: float) -> List[str]:
        header, rows = self.table()
        lines = ["  ".join(f"{name:>15}" for name in header)]
        lines += ["  ".join(f"{_cell(value, digits):>15}" for value in row) for row in rows]
        return lines


Report = Union[FallTimeReport, CollapseReport, TrajectoryReport, CompareReport, PeriodReport, BodiesReport]


def _cell(value: Cell, digits: int) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, bool):
        return "true" if value else "false"
    return format_significant(value, digits)


def _time_line(label: str, seconds: float, digits: int, threshold: float) -> str:
    text = f"{label}: {format_significant(seconds, digits)} s"
    friendly = format_duration(seconds, threshold)
    return f"{text} ({friendly})" if friendly else text


def round_payload(payload: Any, digits: int) -> Any:
    """Round every float in a dumped report to ``digits`` significant digits."""

    if isinstance(payload, bool) or payload is None:
        return payload
    if isinstance(payload, float):
        text = format_significant(payload, digits)
        return float(text) if text else None
    if isinstance(payload, dict):
        return {key: round_payload(value, digits) for key, value in payload.items()}
    if isinstance(payload, (list, tuple)):
        return [round_payload(value, digits) for value in payload]
    return payload


def csv_cells(row: Sequence[Cell], digits: int) -> List[str]:
    """Cells of one CSV row, numbers at ``digits`` significant digits."""

    return [_cell(value, digits) for value in row]
