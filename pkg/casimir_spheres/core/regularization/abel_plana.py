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

"""Abel-Plana engines for regularized sums over integer and half-integer points."""

import dataclasses
import math
from ..common.errors import IdentityMismatchError
from ..common.helpers import adaptive_quad, check_quad_tol
from ..common.models import (
    CalibrationCase,
    CalibrationResult,
    Geometry,
    RegularizedSum,
    SummationVariant,
)
from .branch_cut import U_MAX, branch_cut_F
from collections.abc import Callable
from fractions import Fraction
from loguru import logger


_CALIBRATION_TARGETS = {
    (CalibrationCase.CONST, SummationVariant.INTEGER): Fraction(-1, 2),
    (CalibrationCase.LINEAR, SummationVariant.INTEGER): Fraction(-1, 12),
    (CalibrationCase.CUBIC, SummationVariant.INTEGER): Fraction(1, 120),
    (CalibrationCase.CONST, SummationVariant.HALF_INTEGER): Fraction(0),
    (CalibrationCase.LINEAR, SummationVariant.HALF_INTEGER): Fraction(1, 24),
    (CalibrationCase.CUBIC, SummationVariant.HALF_INTEGER): Fraction(-7, 960),
}


@dataclasses.dataclass(frozen=True)
class AnalyticSummand:
    """A summand f on the positive axis with its jump across the imaginary axis.

    ``discontinuity`` is g(t) = −i·(f(it) − f(−it)), supplied as a real function. When g
    vanishes below a square-root branch point t₀, set ``branch_point`` so the cut integral
    starts there and uses t = t₀ + u².
    """

    f: Callable[[float], float]
    discontinuity: Callable[[float], float]
    branch_point: float | None = None
    label: str = 'summand'


def _cut_integral(summand: AnalyticSummand, kernel_sign: int, quad_tol: float) -> tuple[float, float]:
    """∫ g(t)/(e^{2πt} + kernel_sign) dt over [t₀, ∞), with the branch point removed."""
    start = summand.branch_point or 0.0

    def integrand(u: float) -> float:
        t = start + u * u
        if kernel_sign < 0:
            kernel = 1.0 / math.expm1(2 * math.pi * t)
        else:
            kernel = 1.0 / (math.exp(2 * math.pi * t) + 1.0)
        return 2 * u * summand.discontinuity(t) * kernel

    return adaptive_quad(integrand, 0.0, U_MAX, quad_tol, summand.label)


def abel_plana_integer(summand: AnalyticSummand, quad_tol: float) -> RegularizedSum:
    """Reg Σ_{n≥1} f(n) = −½·f(0) − ∫₀^∞ g(t)/(e^{2πt} − 1) dt."""
    check_quad_tol(quad_tol)
    integral, error = _cut_integral(summand, -1, quad_tol)
    boundary = -0.5 * summand.f(0.0)
    cut = -integral
    logger.debug('Integer Abel-Plana for {}: boundary {} cut {}', summand.label, boundary, cut)
    return RegularizedSum(
        value=boundary + cut,
        boundary_term=boundary,
        cut_integral=cut,
        truncation_error_estimate=error,
    )


def abel_plana_half_integer(summand: AnalyticSummand, quad_tol: float) -> RegularizedSum:
    """Σ_{n≥0} f(n + ½) − ∫₀^∞ f(x) dx = ∫₀^∞ g(t)/(e^{2πt} + 1) dt."""
    check_quad_tol(quad_tol)
    integral, error = _cut_integral(summand, 1, quad_tol)
    return RegularizedSum(
        value=integral,
        boundary_term=0.0,
        cut_integral=integral,
        truncation_error_estimate=error,
    )


def calibration_summand(case: CalibrationCase) -> AnalyticSummand:
    """Return f(x) = 1, x or x³ together with its jump g."""
    if case is CalibrationCase.CONST:
        return AnalyticSummand(f=lambda x: 1.0, discontinuity=lambda t: 0.0, label='f=1')
    if case is CalibrationCase.LINEAR:
        return AnalyticSummand(f=lambda x: x, discontinuity=lambda t: 2 * t, label='f=x')
    return AnalyticSummand(f=lambda x: x**3, discontinuity=lambda t: -2 * t**3, label='f=x^3')


def calibration_target(case: CalibrationCase, variant: SummationVariant) -> float:
    """Known regularized sum of a calibration summand."""
    return float(_CALIBRATION_TARGETS[(case, variant)])


def run_calibration(
    case: CalibrationCase, variant: SummationVariant, quad_tol: float
) -> CalibrationResult:
    """Run one engine on one calibration summand and compare with its known value."""
    summand = calibration_summand(case)
    if variant is SummationVariant.INTEGER:
        result = abel_plana_integer(summand, quad_tol)
    else:
        result = abel_plana_half_integer(summand, quad_tol)
    target = calibration_target(case, variant)
    return CalibrationResult(
        case=case,
        variant=variant,
        value=result.value,
        target=target,
        abs_error=abs(result.value - target),
        boundary_term=result.boundary_term,
        cut_integral=result.cut_integral,
    )


def mode_summand(geometry: Geometry, ell: int) -> AnalyticSummand:
    """The evenly spaced frequencies f(x) = √((xπ/d)² + ν²/(ab)) of one angular index.

    f(±it) is real below t₀ = νξ/(2π) and jumps to ±i·√((πt/d)² − ν²/(ab)) above it.
    """
    nu = ell + 0.5
    slope = math.pi / geometry.d
    mass = nu / geometry.sqrt_ab
    threshold = nu * geometry.xi / (2 * math.pi)

    def discontinuity(t: float) -> float:
        return 2 * math.sqrt(max((slope * t) ** 2 - mass**2, 0.0))

    return AnalyticSummand(
        f=lambda x: math.hypot(slope * x, mass),
        discontinuity=discontinuity,
        branch_point=threshold,
        label=f'mode sum ell={ell}',
    )


def mode_sum_regularized(geometry: Geometry, ell: int, quad_tol: float) -> RegularizedSum:
    """Reg Σ_{n≥1} ω̃_{nℓ} for one angular index, equal to −ν/(2√(ab)) − (2/ν)·F(ν).

    Raises:
        IdentityMismatchError: if the engine disagrees with the dedicated branch-cut
            integral beyond the quadrature tolerance.
    """
    result = abel_plana_integer(mode_summand(geometry, ell), quad_tol)
    nu = ell + 0.5
    expected = -2 * branch_cut_F(ell, geometry, quad_tol) / nu
    scale = max(abs(expected), abs(result.cut_integral), 1e-300)
    deviation = abs(result.cut_integral - expected) / scale
    if deviation > 100 * quad_tol:
        logger.error('Mode sum for ell={} disagrees with F(ν): {}', ell, deviation)
        raise IdentityMismatchError(f'mode sum ell={ell} against branch-cut F', deviation)
    return result
