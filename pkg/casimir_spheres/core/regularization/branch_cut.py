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

import math
from ..common.errors import DomainError, TermGrowthError
from ..common.helpers import adaptive_quad, check_quad_tol, operation_timer
from ..common.models import BranchCutIntegrand, Geometry, RegularizedSum
from ..special.zeta import hurwitz_zeta_neg
from collections.abc import Callable
from loguru import logger
from typing import Literal


# With t = t₀ + u², e^{−2πu²} is below 1e−18 well before u reaches this.
U_MAX = math.sqrt(math.log(1e18) / (2 * math.pi)) + 1.0

# Past this t₀ the weighted terms F(ν) must decrease monotonically.
DECAY_THRESHOLD = 1.0

MAX_SUM_ELL = 100_000


def branch_cut_integral(nu: float, geometry: Geometry, quad_tol: float) -> float:
    """F(ν)/ν = ∫_{t₀}^∞ [(πt/d)² − ν²/(ab)]^{1/2} dt/(e^{2πt} − 1), for real ν ≥ 0.

    The quadrature runs over the substituted kernel in u, with t = t₀ + u², and the factor
    e^{−2πt₀} is restored afterwards.
    """
    if not nu >= 0:
        raise DomainError('nu', nu, 'order must be non-negative')
    check_quad_tol(quad_tol)
    kernel = BranchCutIntegrand(nu=nu, geometry=geometry)
    inner, _ = adaptive_quad(kernel.substituted, 0.0, U_MAX, quad_tol, f'F(nu={nu:g})')
    return kernel.scale * inner


def branch_cut_F(nu_ell: int, geometry: Geometry, quad_tol: float) -> float:
    """F(ν) = ν·∫_{νξ/2π}^∞ [(tπ/d)² − ν²/(ab)]^{1/2} dt/(e^{2πt} − 1) at ν = ℓ + ½."""
    if nu_ell < 0:
        raise DomainError('nu_ell', nu_ell, 'angular index must be non-negative')
    nu = nu_ell + 0.5
    return nu * branch_cut_integral(nu, geometry, quad_tol)


def branch_cut_sum(
    geometry: Geometry,
    weight: Callable[[int], float],
    quad_tol: float,
    ell_start: int = 0,
    boundary_term: float = 0.0,
) -> RegularizedSum:
    """Sum −2·w(ℓ)·F(ν)/ν over ℓ ≥ ell_start in ascending order.

    Once t₀ = νξ/2π reaches 1 the terms decay geometrically. The sum stops when the last
    term over (1 − r), r the observed ratio, drops below quad_tol times the running sum,
    which bounds the whole remaining tail.

    Raises:
        TermGrowthError: if a term fails to decrease in the decaying regime.
    """
    check_quad_tol(quad_tol)
    pieces: list[float] = []
    accumulated = 0.0
    previous: float | None = None
    tail = 0.0
    ell = ell_start
    while True:
        nu = ell + 0.5
        term = -2 * weight(ell) * branch_cut_integral(nu, geometry, quad_tol)
        pieces.append(term)
        accumulated += term
        decaying = nu * geometry.xi / (2 * math.pi) >= DECAY_THRESHOLD
        if decaying and term == 0.0:
            break
        if decaying and previous:
            ratio = term / previous
            if ratio >= 1:
                logger.error('Branch-cut sum stopped decreasing at ell={}', ell)
                raise TermGrowthError(ell, term, previous)
            if abs(term) / (1 - ratio) < quad_tol * abs(accumulated):
                tail = abs(term) * ratio / (1 - ratio)
                break
        previous = term
        ell += 1
        if ell > MAX_SUM_ELL:
            raise TermGrowthError(ell, term, previous)

    cut = math.fsum(pieces)
    logger.info('Branch-cut sum converged after {} terms at ell={}', len(pieces), ell)
    return RegularizedSum(
        value=boundary_term + cut,
        boundary_term=boundary_term,
        cut_integral=cut,
        truncation_error_estimate=tail + quad_tol * math.fsum(abs(p) for p in pieces),
        pieces=pieces,
    )


def etilde_numeric(geometry: Geometry, quad_tol: float) -> RegularizedSum:
    """Regularized energy of the evenly spaced spectrum, −2·Σ_{ℓ≥0} F(ν).

    The divergent polynomial part −(1/(2√(ab)))·Σν² is replaced by its Hurwitz value
    ζ(−2, ½) = 0 and kept as ``boundary_term``.
    """
    boundary = -hurwitz_zeta_neg(2, 0.5) / (2 * geometry.sqrt_ab)
    with operation_timer('etilde_numeric', a=geometry.a, b=geometry.b, quad_tol=quad_tol):
        return branch_cut_sum(
            geometry, lambda ell: ell + 0.5, quad_tol, ell_start=0, boundary_term=boundary
        )


def leading_term_integral(
    geometry: Geometry, quad_tol: float, method: Literal['swapped', 'nested'] = 'swapped'
) -> float:
    """−2∫₀^∞ F(ν) dν, the integral part of the half-integer Abel-Plana sum over ℓ.

    ``swapped`` integrates over ν first, which leaves
    −2·(ab/3)·(π/d)³·∫₀^∞ t³ dt/(e^{2πt} − 1) = −ζ(4)·ab/(4πd³).
    ``nested`` integrates F(ν) numerically over ν, one branch-cut quadrature per node.
    """
    check_quad_tol(quad_tol)
    if method == 'swapped':
        moment, _ = adaptive_quad(
            lambda t: t**3 / math.expm1(2 * math.pi * t), 0.0, U_MAX**2, quad_tol, 't^3 moment'
        )
        return -2 * (geometry.a * geometry.b / 3) * (math.pi / geometry.d) ** 3 * moment

    inner_tol = max(quad_tol / 100, 1e-12)
    nu_max = (math.log(1e18) + 20) / geometry.xi
    with operation_timer('leading_term_integral', a=geometry.a, b=geometry.b, method=method):
        value, _ = adaptive_quad(
            lambda nu: nu * branch_cut_integral(nu, geometry, inner_tol),
            0.0,
            nu_max,
            quad_tol,
            'F over nu',
        )
    return -2 * value
