# Copyright casimir-spheres maintainers. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Command-line front end for the Casimir energy pipelines."""

import argparse
import dataclasses
import sys
from .core.asymptotics.parity import default_y_grid, verify_ebar_vanishes
from .core.common.config import (
    LOG_FILE,
    LOG_LEVEL,
    get_quad_tol_from_env,
    validate_quad_tol,
)
from .core.common.errors import CasimirError, NumericalError
from .core.common.helpers import as_json, operation_timer, write_table
from .core.common.models import (
    CalibrationCase,
    EnergyBreakdown,
    MethodChoice,
    OutputFormat,
    ParityReport,
    RunConfig,
    Subcommand,
    SummationVariant,
    Variant,
)
from .core.energy.closed_form import limit_scan
from .core.energy.numeric import compare_methods, energy_breakdown
from .core.regularization.abel_plana import run_calibration
from .core.spectrum.roots import find_roots, spectrum_check
from collections.abc import Sequence
from loguru import logger
from typing import Any


EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NUMERICAL = 2

LOG_LEVELS = ['TRACE', 'DEBUG', 'INFO', 'SUCCESS', 'WARNING', 'ERROR', 'CRITICAL']

_VARIANTS = {'full': Variant.FULL_SPHERE, 'half': Variant.HALF_SPHERE}

_UNITS = """\
units:
  Lengths are dimensionless: a, b and d share whatever unit the caller picks.
  Energies are in inverse units of that length, with hbar = c = 1.
  Per-area energies are in inverse length to the fourth.

environment:
  CASIMIR_QUAD_TOL   default quadrature tolerance (overridden by --quad-tol)
  CASIMIR_LOG_LEVEL  default for --log-level
  CASIMIR_LOG_FILE   optional log file, rotated at 10 MB

exit status:
  0 success, 1 invalid arguments, 2 numerical failure (diagnostic JSON on stderr)
"""


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that exits with the invalid-arguments status."""

    def error(self, message: str):
        """Print usage and the error, then exit with status 1."""
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f'{self.prog}: error: {message}\n')


def _float_list(raw: str) -> list[float]:
    try:
        values = [float(item) for item in raw.split(',') if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected comma-separated numbers, got {raw!r}')
    if not values:
        raise argparse.ArgumentTypeError('expected at least one number')
    return values


def _int_list(raw: str) -> list[int]:
    try:
        values = [int(item) for item in raw.split(',') if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected comma-separated integers, got {raw!r}')
    if not values:
        raise argparse.ArgumentTypeError('expected at least one integer')
    return values


def _y_grid(raw: str) -> list[float]:
    """Parse either a comma-separated list or START:STOP:COUNT for a log-spaced grid."""
    if ':' not in raw:
        return _float_list(raw)
    parts = raw.split(':')
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f'expected START:STOP:COUNT, got {raw!r}')
    try:
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected START:STOP:COUNT, got {raw!r}')
    if not 0 < start < stop or count < 1:
        raise argparse.ArgumentTypeError('need 0 < START < STOP and COUNT >= 1')
    return default_y_grid(start, stop, count)


def _add_geometry(parser: argparse.ArgumentParser, require_b: bool = True):
    parser.add_argument('--a', type=float, default=1.0, help='Inner radius (default: 1.0)')
    if require_b:
        parser.add_argument('--b', type=float, required=True, help='Outer radius, b > a')


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subparser per pipeline."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--format',
        choices=[fmt.value for fmt in OutputFormat],
        default=OutputFormat.JSON.value,
        help='Report format (default: json)',
    )
    common.add_argument('--output', default=None, help='Write the report here instead of stdout')
    common.add_argument(
        '--quad-tol',
        type=float,
        default=None,
        help='Relative quadrature tolerance in [1e-12, 1e-2] (default: CASIMIR_QUAD_TOL or 1e-10)',
    )
    common.add_argument(
        '--log-level',
        type=str.upper,
        choices=LOG_LEVELS,
        default=LOG_LEVEL.upper(),
        help='Diagnostics level on stderr (default: CASIMIR_LOG_LEVEL or WARNING)',
    )

    parser = _Parser(
        prog='casimir-spheres',
        description='Scalar Casimir energy between concentric spheres and half spheres by direct mode summation.',
        epilog=_UNITS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    subparsers = parser.add_subparsers(dest='subcommand', required=True, parser_class=_Parser)

    roots = subparsers.add_parser(
        Subcommand.ROOTS.value,
        parents=[common],
        help='Eigenfrequencies of one angular index against the asymptotic spectrum',
        epilog=_UNITS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    _add_geometry(roots)
    roots.add_argument('--ell', type=int, default=0, help='Angular index (default: 0)')
    roots.add_argument('--n-max', type=int, default=10, help='Number of roots (default: 10)')

    check = subparsers.add_parser(
        Subcommand.SPECTRUM_CHECK.value,
        parents=[common],
        help='Per-ell deviation of numerical roots from the evenly spaced spectrum',
        epilog=_UNITS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    _add_geometry(check)
    check.add_argument('--ell-max', type=int, default=5, help='Largest angular index (default: 5)')
    check.add_argument('--n-max', type=int, default=10, help='Roots per angular index (default: 10)')

    energy = subparsers.add_parser(
        Subcommand.ENERGY.value,
        parents=[common],
        help='Casimir energy with its decomposition and per-area values',
        epilog=_UNITS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    _add_geometry(energy)
    energy.add_argument('--variant', choices=list(_VARIANTS), default='full', help='Cavity (default: full)')
    energy.add_argument(
        '--method',
        choices=[choice.value for choice in MethodChoice],
        default=MethodChoice.BOTH.value,
        help='Closed form, numeric mode sum, or both with their relative difference (default: both)',
    )

    scan = subparsers.add_parser(
        Subcommand.LIMIT_SCAN.value,
        parents=[common],
        help='Per-area energy against the parallel-plate value as the gap closes',
        epilog=_UNITS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    _add_geometry(scan, require_b=False)
    scan.add_argument(
        '--eta-list',
        type=_float_list,
        default=[0.2, 0.1, 0.05, 0.02],
        help='Comma-separated gap ratios d/sqrt(ab) (default: 0.2,0.1,0.05,0.02)',
    )
    scan.add_argument('--variant', choices=list(_VARIANTS), default='full', help='Cavity (default: full)')

    calibration = subparsers.add_parser(
        Subcommand.ABEL_PLANA.value,
        parents=[common],
        help='Abel-Plana engines on polynomial summands with known regularized sums',
        epilog=_UNITS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    calibration.add_argument(
        '--case',
        choices=[case.value for case in CalibrationCase],
        default=CalibrationCase.LINEAR.value,
        help='Summand 1, x or x^3 (default: linear)',
    )
    calibration.add_argument(
        '--variant',
        choices=[variant.value for variant in SummationVariant],
        default=SummationVariant.INTEGER.value,
        help='Sum over n = 1, 2, ... or n = 1/2, 3/2, ... (default: integer)',
    )

    ebar = subparsers.add_parser(
        Subcommand.VERIFY_EBAR.value,
        parents=[common],
        help='Parity evidence that the high-ell contribution has no real part',
        epilog=_UNITS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    _add_geometry(ebar)
    ebar.add_argument(
        '--ell-list',
        type=_int_list,
        default=[10, 30],
        help='Comma-separated angular indices (default: 10,30)',
    )
    ebar.add_argument(
        '--y-grid',
        type=_y_grid,
        default=None,
        help='Comma-separated y values, or START:STOP:COUNT log-spaced (default: 0.01:0.1:40)',
    )
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Validate parsed arguments into a RunConfig."""
    quad_tol = validate_quad_tol(args.quad_tol) if args.quad_tol is not None else get_quad_tol_from_env()
    subcommand = Subcommand(args.subcommand)
    fields: dict[str, Any] = {
        'subcommand': subcommand,
        'a': getattr(args, 'a', 1.0),
        'b': getattr(args, 'b', None),
        'quad_tol': quad_tol,
        'format': OutputFormat(args.format),
        'output_path': args.output,
    }
    if subcommand is Subcommand.ROOTS:
        fields.update(ell=args.ell, n_max=args.n_max)
    elif subcommand is Subcommand.SPECTRUM_CHECK:
        fields.update(ell_max=args.ell_max, n_max=args.n_max)
    elif subcommand is Subcommand.ENERGY:
        fields.update(variant=_VARIANTS[args.variant], method=MethodChoice(args.method))
    elif subcommand is Subcommand.LIMIT_SCAN:
        fields.update(eta_list=args.eta_list, variant=_VARIANTS[args.variant])
    elif subcommand is Subcommand.ABEL_PLANA:
        fields.update(case=CalibrationCase(args.case), summation=SummationVariant(args.variant))
    else:
        fields.update(ell_list=args.ell_list, y_grid=args.y_grid or default_y_grid())
    return RunConfig(**fields)


def parse_args(argv: Sequence[str] | None = None) -> tuple[RunConfig, str]:
    """Parse command-line arguments into a RunConfig and a log level."""
    args = build_parser().parse_args(argv)
    return config_from_args(args), args.log_level


def configure_logging(level: str):
    """Send diagnostics to stderr and, when CASIMIR_LOG_FILE is set, to a rotating file."""
    logger.remove()
    logger.add(sys.stderr, level=level)
    if LOG_FILE:
        logger.add(LOG_FILE, level=level, rotation='10 MB', retention='7 days')


def _energy_row(breakdown: EnergyBreakdown) -> dict[str, Any]:
    """Flatten corrections into a name-keyed mapping so CSV columns stay stable."""
    row = breakdown.model_dump(by_alias=True, exclude={'corrections'})
    row['corrections'] = {
        correction.name: {'bracket_term': correction.bracket_term, 'energy': correction.energy}
        for correction in breakdown.corrections
    }
    return row


def _parity_rows(report: ParityReport) -> list[dict[str, Any]]:
    summary = {
        'record': 'summary',
        'a': report.geometry.a,
        'b': report.geometry.b,
        'lambda': report.geometry.lambda_,
        'points': len(report.y_grid),
        'insufficient_grid': report.insufficient_grid,
        'parity_holds': report.parity_holds,
    }
    fits = [{'record': 'fit', **fit.model_dump()} for fit in report.fits]
    checks = [{'record': 'cutoff', **check.model_dump()} for check in report.cutoff_checks]
    return [summary, *fits, *checks]


def _energy_rows(config: RunConfig) -> list[dict[str, Any]]:
    geometry = config.geometry()
    if config.method is MethodChoice.BOTH:
        breakdowns = compare_methods(geometry, config.variant, config.quad_tol)
    else:
        method = config.method.to_method()
        breakdowns = [energy_breakdown(geometry, config.variant, method, config.quad_tol)]
    return [_energy_row(breakdown) for breakdown in breakdowns]


def report_rows(config: RunConfig) -> list[Any]:
    """Run the configured pipeline and return its report rows."""
    subcommand = config.subcommand
    if subcommand is Subcommand.ROOTS:
        return find_roots(config.geometry(), config.ell, config.n_max).rows()
    if subcommand is Subcommand.SPECTRUM_CHECK:
        return spectrum_check(config.geometry(), config.ell_max, config.n_max)
    if subcommand is Subcommand.ENERGY:
        return _energy_rows(config)
    if subcommand is Subcommand.LIMIT_SCAN:
        return limit_scan(config.a, config.eta_list, config.variant)
    if subcommand is Subcommand.ABEL_PLANA:
        return [run_calibration(config.case, config.summation, config.quad_tol)]
    report = verify_ebar_vanishes(
        config.geometry(), config.ell_list, config.y_grid, quad_tol=config.quad_tol
    )
    return _parity_rows(report)


def run(config: RunConfig) -> int:
    """Run one pipeline and emit its report; return the exit status."""
    try:
        with operation_timer(config.subcommand.value, format=config.format.value):
            rows = report_rows(config)
        text = write_table(
            rows,
            config.format.value,
            config.output_path,
            config=config.model_dump(mode='json'),
        )
    except NumericalError as e:
        logger.error('{} failed: {}', config.subcommand.value, e)
        sys.stderr.write(as_json(dataclasses.asdict(e.as_failure())) + '\n')
        return EXIT_NUMERICAL
    except (CasimirError, ValueError) as e:
        sys.stderr.write(f'casimir-spheres: error: {e}\n')
        return EXIT_INVALID

    if config.output_path is None:
        sys.stdout.write(text)
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    """Main entry point for the casimir-spheres command."""
    try:
        config, level = parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INVALID
    except ValueError as e:  # includes pydantic ValidationError
        sys.stderr.write(f'casimir-spheres: error: {e}\n')
        return EXIT_INVALID

    configure_logging(level)
    return run(config)


if __name__ == '__main__':
    sys.exit(main())
