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

import sys
from .core.asymptotics.parity import default_y_grid, verify_ebar_vanishes
from .core.common.config import (
    DEFAULT_QUAD_TOL,
    HOST,
    LOG_FILE,
    LOG_LEVEL,
    MAX_ELL,
    MAX_QUAD_TOL,
    MAX_ROOTS,
    MIN_QUAD_TOL,
    PORT,
    STATELESS_HTTP,
    TRANSPORT,
)
from .core.common.errors import CasimirError
from .core.common.models import (
    CalibrationCase,
    CalibrationResult,
    EnergyBreakdown,
    Geometry,
    LimitScanRow,
    MethodChoice,
    ParityReport,
    RootTable,
    SummationVariant,
    Variant,
)
from .core.energy.closed_form import limit_scan
from .core.energy.numeric import compare_methods, energy_breakdown
from .core.regularization.abel_plana import run_calibration
from .core.spectrum.roots import find_roots
from fastmcp import Context, FastMCP
from loguru import logger
from mcp.types import ToolAnnotations
from pydantic import Field
from typing import Annotated


logger.remove()
logger.add(sys.stderr, level=LOG_LEVEL)
if LOG_FILE:
    logger.add(LOG_FILE, rotation='10 MB', retention='7 days')


server = FastMCP(name='Casimir-Spheres-MCP')

_UNITS = 'Lengths are dimensionless; energies are in inverse length with hbar = c = 1.'


async def _geometry(a: float, b: float, ctx: Context) -> Geometry:
    try:
        return Geometry(a=a, b=b)
    except ValueError as e:
        error_message = f'Invalid geometry: {e}'
        await ctx.error(error_message)
        raise


@server.tool(
    name='find_eigenfrequencies',
    description=f"""Find the first eigenfrequencies of a scalar field between two concentric spheres.

    The field vanishes on both spheres. Frequencies of angular index ell are the roots of
    J_nu(wa)N_nu(wb) - J_nu(wb)N_nu(wa) with nu = ell + 1/2. Each root is reported with the
    evenly spaced estimate sqrt((n pi/d)^2 + nu^2/(ab)) and the relative deviation between
    the two. {_UNITS}

    Returns:
        The root table: numerical roots, asymptotic roots and relative deviations.
    """,
    annotations=ToolAnnotations(
        title='Find eigenfrequencies', readOnlyHint=True, openWorldHint=False
    ),
)
async def find_eigenfrequencies(
    a: Annotated[float, Field(description='Inner radius', gt=0)],
    b: Annotated[float, Field(description='Outer radius, larger than a', gt=0)],
    ell: Annotated[int, Field(description='Angular index', ge=0, le=MAX_ELL)],
    n_max: Annotated[int, Field(description='Number of roots', ge=1, le=MAX_ROOTS)],
    ctx: Context,
) -> RootTable:
    """Find eigenfrequencies of one angular index."""
    geometry = await _geometry(a, b, ctx)
    logger.info('Finding {} roots for ell={} in {}', n_max, ell, geometry)
    try:
        return find_roots(geometry, ell, n_max)
    except CasimirError as e:
        await ctx.error(e.as_failure().reason)
        raise


@server.tool(
    name='casimir_energy',
    description=f"""Compute the scalar Casimir energy between concentric spheres or half spheres.

    The closed form is the leading gap expansion of the regularized mode sum. The numeric
    method evaluates the branch-cut integrals of the Abel-Plana regularized sum directly.
    With method 'both' the numeric result carries its relative difference from the closed
    form in 'reference_difference'. {_UNITS}

    Returns:
        One energy breakdown per method: total energy, leading term, named corrections,
        per-area energy and the parallel-plate limit.
    """,
    annotations=ToolAnnotations(title='Casimir energy', readOnlyHint=True, openWorldHint=False),
)
async def casimir_energy(
    a: Annotated[float, Field(description='Inner radius', gt=0)],
    b: Annotated[float, Field(description='Outer radius, larger than a', gt=0)],
    ctx: Context,
    variant: Annotated[
        Variant, Field(description='full_sphere, or half_sphere with a Dirichlet equatorial plane')
    ] = Variant.FULL_SPHERE,
    method: Annotated[
        MethodChoice, Field(description='closed-form, numeric or both')
    ] = MethodChoice.BOTH,
    quad_tol: Annotated[
        float,
        Field(description='Relative quadrature tolerance', ge=MIN_QUAD_TOL, le=MAX_QUAD_TOL),
    ] = DEFAULT_QUAD_TOL,
) -> list[EnergyBreakdown]:
    """Compute the Casimir energy of a geometry."""
    geometry = await _geometry(a, b, ctx)
    logger.info('Computing {} energy ({}) for {}', variant.value, method.value, geometry)
    try:
        if method is MethodChoice.BOTH:
            return compare_methods(geometry, variant, quad_tol)
        return [energy_breakdown(geometry, variant, method.to_method(), quad_tol)]
    except CasimirError as e:
        await ctx.error(e.as_failure().reason)
        raise


@server.tool(
    name='plate_limit_scan',
    description=f"""Compare the closed-form per-area energy with the parallel-plate value.

    For each gap ratio eta = d/sqrt(ab) the outer radius is chosen so that the geometry has
    exactly that ratio. The ratio per_area/plate_limit tends to 1 as eta goes to 0 for full
    spheres, and bracket_ratio removes the b/a area factor. {_UNITS}
    """,
    annotations=ToolAnnotations(title='Plate limit scan', readOnlyHint=True, openWorldHint=False),
)
async def plate_limit_scan(
    eta_list: Annotated[
        list[float], Field(description='Gap ratios d/sqrt(ab), each positive', min_length=1)
    ],
    ctx: Context,
    a: Annotated[float, Field(description='Inner radius', gt=0)] = 1.0,
    variant: Annotated[Variant, Field(description='full_sphere or half_sphere')] = Variant.FULL_SPHERE,
) -> list[LimitScanRow]:
    """Scan gap ratios towards the parallel-plate limit."""
    logger.info('Scanning eta={} for a={}', eta_list, a)
    try:
        return limit_scan(a, eta_list, variant)
    except (CasimirError, ValueError) as e:
        await ctx.error(str(e))
        raise


@server.tool(
    name='abel_plana_calibration',
    description="""Run an Abel-Plana summation engine on a summand with a known regularized sum.

    Cases are the constants 1, x and x^3. The integer engine sums n = 1, 2, ... and the
    half engine sums n = 1/2, 3/2, ...; e.g. the integer linear case gives -1/12.
    """,
    annotations=ToolAnnotations(
        title='Abel-Plana calibration', readOnlyHint=True, openWorldHint=False
    ),
)
async def abel_plana_calibration(
    case: Annotated[CalibrationCase, Field(description='const, linear or cubic')],
    variant: Annotated[SummationVariant, Field(description='integer or half')],
    ctx: Context,
    quad_tol: Annotated[
        float,
        Field(description='Relative quadrature tolerance', ge=MIN_QUAD_TOL, le=MAX_QUAD_TOL),
    ] = DEFAULT_QUAD_TOL,
) -> CalibrationResult:
    """Calibrate an Abel-Plana engine."""
    try:
        return run_calibration(case, variant, quad_tol)
    except CasimirError as e:
        await ctx.error(e.as_failure().reason)
        raise


@server.tool(
    name='verify_ebar',
    description="""Check numerically that the high angular-index part of the energy has no real part.

    The log-derivative of I_nu(z)K_nu(lambda z) - I_nu(lambda z)K_nu(z) at z = nu*y is fitted
    by polynomials in y; the odd coefficients must vanish to rounding level. Cutoff integrals
    of even powers along rotated rays must be purely imaginary by closed form and quadrature.
    """,
    annotations=ToolAnnotations(title='Verify E-bar parity', readOnlyHint=True, openWorldHint=False),
)
async def verify_ebar(
    a: Annotated[float, Field(description='Inner radius', gt=0)],
    b: Annotated[float, Field(description='Outer radius, larger than a', gt=0)],
    ctx: Context,
    ell_list: Annotated[
        list[int], Field(description='Angular indices to fit', min_length=1)
    ] = [10, 30],
    y_grid: Annotated[
        list[float] | None,
        Field(description='Grid of y = z/nu values; defaults to 40 log-spaced points in [0.01, 0.1]'),
    ] = None,
) -> ParityReport:
    """Collect the parity evidence for one geometry."""
    geometry = await _geometry(a, b, ctx)
    try:
        return verify_ebar_vanishes(geometry, ell_list, y_grid or default_y_grid())
    except CasimirError as e:
        await ctx.error(e.as_failure().reason)
        raise


def main():
    """Main entry point for the Casimir spheres MCP server."""
    logger.info('Starting Casimir-Spheres-MCP over {}', TRANSPORT)
    if TRANSPORT == 'stdio':
        server.run(
            transport=TRANSPORT,
        )
    else:  # streamable-http
        server.run(
            transport=TRANSPORT,
            host=HOST,
            port=PORT,
            stateless_http=STATELESS_HTTP,
        )


if __name__ == '__main__':
    main()
