"""Command-line entry point for radialfall.

Usage examples:
  radialfall collapse --body earth
  radialfall falltime --body earth --r0 6371000 --r1 0 --model both
  radialfall trajectory --r0 1 --mu 1 --samples 50 --floor 0.1 --oracle --format csv
  radialfall compare --body earth --eps-list 1e-8,1e-6,1e-4,1
  radialfall period --ellipse --rmax 6371000 --rmin 0 --body earth --limit-check 1e-2,1e-4
  radialfall bodies list --format json

Exit codes: 0 success, 2 usage or domain error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import logging
import sys
from typing import Callable, Dict, List, Optional, Sequence, TextIO

from config.settings import Settings, settings as default_settings
from src.bodies.catalog import UnknownBody
from src.cli import commands
from src.cli.reports import OutputFormat, Report, csv_cells, round_payload
from src.numerics.errors import NumericalError
from src.utils.validators import DomainError

LOGGER = logging.getLogger(__name__)

PROG = "radialfall"
EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3

Handler = Callable[[argparse.Namespace, Settings], Report]

_HANDLERS: Dict[str, Handler] = {
    "falltime": commands.cmd_falltime,
    "collapse": commands.cmd_collapse,
    "trajectory": commands.cmd_trajectory,
    "compare": commands.cmd_compare,
    "period": commands.cmd_period,
    "bodies": commands.cmd_bodies,
}


class UsageError(Exception):
    """Raised instead of printing usage and exiting on bad arguments."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _float_list(text: str) -> List[float]:
    try:
        values = [float(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from exc
    if not values:
        raise argparse.ArgumentTypeError("expected at least one number")
    return values


def _precision(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"precision must be an integer, got {text!r}") from exc
    if not 1 <= value <= 17:
        raise argparse.ArgumentTypeError(f"precision must lie in [1, 17], got {value}")
    return value


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    # SUPPRESS keeps a flag given before the subcommand from being reset by the
    # subparser's own default.
    parser.add_argument("--format", choices=["human", "csv", "json"], default=argparse.SUPPRESS)
    parser.add_argument("--precision", type=_precision, default=argparse.SUPPRESS, help="Significant digits (1-17).")
    parser.add_argument("--verbose", "-v", action="store_true", default=argparse.SUPPRESS, help="Debug logging.")


def _add_field_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--mu", type=float, help="Gravitational parameter G*M in m^3/s^2.")
    group.add_argument("--body", help="Catalog body name (see `bodies list`).")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=PROG, description="Radial free-fall times, trajectories and orbital periods.")
    _add_output_flags(parser)
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    subparsers.required = True

    falltime = subparsers.add_parser("falltime", help="Fall time from r0 to r1.")
    falltime.add_argument("--r0", type=float, help="Release radius in m (defaults to the body's radius).")
    falltime.add_argument("--r1", type=float, required=True, help="Target radius in m.")
    falltime.add_argument("--model", choices=["exact", "constant-g", "both"], default="exact")
    _add_field_flags(falltime)

    collapse = subparsers.add_parser("collapse", help="Time to fall from a radius to the centre.")
    collapse.add_argument("--radius", type=float, help="Radius in m (defaults to the body's radius).")
    _add_field_flags(collapse)

    trajectory = subparsers.add_parser("trajectory", help="Tabulate r(t) and v(t).")
    trajectory.add_argument("--r0", type=float, help="Release radius in m (defaults to the body's radius).")
    trajectory.add_argument("--samples", type=int, required=True, help="Number of samples (>= 2).")
    trajectory.add_argument("--floor", type=float, default=0.0, help="Lowest radius in m (default 0).")
    trajectory.add_argument("--oracle", action="store_true", help="Add the ODE-integrated radius and deviation.")
    _add_field_flags(trajectory)

    compare = subparsers.add_parser("compare", help="Exact vs constant-g drop times for eps = h/r0.")
    compare.add_argument("--r0", type=float, help="Release radius in m (defaults to the body's radius).")
    compare.add_argument("--eps-list", type=_float_list, required=True, help="Comma-separated eps values in (0, 1].")
    _add_field_flags(compare)

    period = subparsers.add_parser("period", help="Circular or elliptical orbital period.")
    shape = period.add_mutually_exclusive_group(required=True)
    shape.add_argument("--circular", action="store_true")
    shape.add_argument("--ellipse", action="store_true")
    period.add_argument("--r", type=float, help="Circular orbit radius in m.")
    period.add_argument("--rmax", type=float, help="Apoapsis distance in m.")
    period.add_argument("--rmin", type=float, help="Periapsis distance in m.")
    period.add_argument("--limit-check", type=_float_list, help="Comma-separated deltas for the degenerate-ellipse table.")
    _add_field_flags(period)

    bodies = subparsers.add_parser("bodies", help="Celestial-body catalog.")
    bodies_actions = bodies.add_subparsers(dest="action", metavar="ACTION", parser_class=_Parser)
    bodies_actions.required = True
    _add_output_flags(bodies_actions.add_parser("list", help="List catalog bodies."))

    for sub in (falltime, collapse, trajectory, compare, period, bodies):
        _add_output_flags(sub)
    return parser


def render(report: Report, fmt: OutputFormat, config: Settings) -> str:
    """Render ``report`` as human text, CSV or JSON."""

    if fmt.kind == "json":
        payload = round_payload(report.model_dump(mode="json"), fmt.precision)
        return json.dumps(payload, indent=2) + "\n"
    if fmt.kind == "csv":
        header, rows = report.table()
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow(csv_cells(row, fmt.precision))
        return buffer.getvalue()
    output = config.output
    lines = report.human(output.human_significant_digits, output.friendly_duration_threshold_s)
    return "\n".join(lines) + "\n"


def _configure_logging(verbose: bool, config: Settings) -> None:
    level = logging.DEBUG if verbose else getattr(logging, config.logging.level.upper(), logging.WARNING)
    logging.basicConfig(level=level, format=config.logging.format, stream=sys.stderr)
    logging.getLogger("src").setLevel(level)


def _fail(stream: TextIO, message: str) -> None:
    first_line = str(message).strip().splitlines()[0] if str(message).strip() else "unknown error"
    stream.write(f"{PROG}: error: {first_line}\n")
    stream.flush()


def main(
    argv: Sequence[str] | None = None,
    *,
    config: Optional[Settings] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    config = config or default_settings
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()

    try:
        # --help and the subcommand help pages print through sys.stdout.
        with contextlib.redirect_stdout(stdout):
            args = parser.parse_args(list(argv) if argv is not None else None)
    except UsageError as exc:
        _fail(stderr, str(exc))
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    _configure_logging(getattr(args, "verbose", False), config)
    fmt = OutputFormat(
        kind=getattr(args, "format", config.output.default_format),
        precision=getattr(args, "precision", config.output.default_precision),
    )
    LOGGER.debug("Running %s with %r", args.command, vars(args))

    try:
        report = _HANDLERS[args.command](args, config)
        text = render(report, fmt, config)
    except (DomainError, UnknownBody) as exc:
        _fail(stderr, str(exc))
        return EXIT_USAGE
    except NumericalError as exc:
        _fail(stderr, str(exc))
        return EXIT_NUMERICAL
    except ArithmeticError as exc:
        LOGGER.debug("Arithmetic failure in %s", args.command, exc_info=True)
        _fail(stderr, f"result out of floating-point range: {exc}")
        return EXIT_NUMERICAL

    stdout.write(text)
    stdout.flush()
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
