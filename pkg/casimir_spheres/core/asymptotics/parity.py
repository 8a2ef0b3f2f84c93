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
import numpy as np
from ..common.config import DEFAULT_QUAD_TOL
from ..common.errors import DomainError, ParityFitError
from ..common.helpers import operation_timer
from ..common.models import CutoffCheck, Geometry, ParityFit, ParityReport
from .cross_product import cross_product
from .cutoff import cutoff_integral, cutoff_integral_quadrature
from collections.abc import Sequence
from loguru import logger


DEFAULT_MAX_POWER = 12
MAX_CONDITION = 1e14
ODD_NOISE_FACTOR = 1e3
EVEN_NOISE_FACTOR = 10.0
IMAGINARY_TOLERANCE = 1e-8
DEFAULT_CUTOFF_ORDERS = (0, 1, 2, 3)
DEFAULT_ANGLES = (math.pi / 6, math.pi / 4, math.pi / 3)


def default_y_grid(lower: float = 0.01, upper: float = 0.1, points: int = 40) -> list[float]:
    """Logarithmically spaced grid of rescaled frequencies."""
    return np.geomspace(lower, upper, points).tolist()


def _design(scaled: np.ndarray, powers: Sequence[int]) -> np.ndarray:
    return np.column_stack([scaled**k for k in powers])


def parity_fit(
    ell: int, y_grid: Sequence[float], lambda_: float, max_power: int = DEFAULT_MAX_POWER
) -> ParityFit:
    """Fit the log-derivative in powers of y with and without odd powers.

    Both fits run on y/y_max. The even basis is y², y⁴, …, y^{max_power} and the full basis
    y², y³, …, y^{max_power}. The noise floor is the RMS of the rounding bounds reported by
    the cross product. Odd coefficients count as zero when they stay below 1e3 times that
    floor scaled by cond(A)/‖A‖, and the even fit is at noise level when its residual RMS
    is within 10× the floor.

    Raises:
        ParityFitError: if the full design matrix is rank deficient or nearly singular.
    """
    if max_power < 3:
        raise DomainError('max_power', max_power, 'an odd power needs max_power ≥ 3')
    grid = np.unique(np.asarray(y_grid, dtype=float))
    nu = ell + 0.5
    full_powers = list(range(2, max_power + 1))
    even_powers = full_powers[::2]
    if grid.size < len(full_powers):
        logger.warning(
            'Parity fit for ell={} has {} distinct points for {} basis functions',
            ell,
            grid.size,
            len(full_powers),
        )
        return ParityFit(
            ell=ell, nu=nu, points=int(grid.size), insufficient_grid=True, max_power=max_power
        )

    samples = [cross_product(ell, float(y), lambda_) for y in grid]
    data = np.array([sample.log_deriv for sample in samples])
    noise = np.array([sample.log_deriv_noise for sample in samples])
    scaled = grid / grid[-1]

    full = _design(scaled, full_powers)
    singular_values = np.linalg.svd(full, compute_uv=False)
    condition = float(singular_values[0] / singular_values[-1])
    rank = int(np.linalg.matrix_rank(full))
    if rank < len(full_powers) or not condition < MAX_CONDITION:
        logger.error('Parity fit for ell={} is ill-conditioned: cond={}', ell, condition)
        raise ParityFitError(condition, float(grid[0]), float(grid[-1]))

    even = _design(scaled, even_powers)
    even_coefficients = np.linalg.lstsq(even, data, rcond=None)[0]
    full_coefficients = np.linalg.lstsq(full, data, rcond=None)[0]
    odd_coefficients = full_coefficients[1::2]

    even_rms = float(np.sqrt(np.mean((even @ even_coefficients - data) ** 2)))
    full_rms = float(np.sqrt(np.mean((full @ full_coefficients - data) ** 2)))
    noise_floor = float(np.sqrt(np.mean(noise**2)))
    # noise floor amplified by the condition number, i.e. noise_floor / σ_min
    noise_level = max(noise_floor, np.finfo(float).eps * float(np.max(np.abs(data))))
    threshold = ODD_NOISE_FACTOR * condition * noise_level / float(singular_values[0])
    return ParityFit(
        ell=ell,
        nu=nu,
        points=int(grid.size),
        max_power=max_power,
        even_coefficients=even_coefficients.tolist(),
        odd_coefficients=odd_coefficients.tolist(),
        odd_threshold=threshold,
        condition_number=condition,
        even_residual_rms=even_rms,
        full_residual_rms=full_rms,
        noise_floor=noise_floor,
        odd_consistent_with_zero=bool(np.all(np.abs(odd_coefficients) <= threshold)),
        even_fit_at_noise=even_rms <= EVEN_NOISE_FACTOR * noise_floor,
    )


def check_cutoff(
    n: int, nu: float, b: float, alpha: float, phi: float, tol: float = DEFAULT_QUAD_TOL
) -> CutoffCheck:
    """Compare the closed-form cutoff integral with its rotated-ray quadrature."""
    closed = cutoff_integral(n, nu, b, alpha, phi)
    numeric = cutoff_integral_quadrature(n, nu, b, alpha, phi, tol=tol)
    relative_error = abs(numeric - closed) / abs(closed)
    real_part_ratio = abs(numeric.real) / abs(numeric)
    return CutoffCheck(
        n=n,
        nu=nu,
        b=b,
        alpha=alpha,
        phi=phi,
        closed_form=closed,
        quadrature=numeric,
        relative_error=relative_error,
        real_part_ratio=real_part_ratio,
        purely_imaginary=closed.real == 0.0
        and real_part_ratio < IMAGINARY_TOLERANCE
        and relative_error < IMAGINARY_TOLERANCE,
    )


def verify_ebar_vanishes(
    geometry: Geometry,
    ell_list: Sequence[int],
    y_grid: Sequence[float],
    max_power: int = DEFAULT_MAX_POWER,
    cutoff_orders: Sequence[int] = DEFAULT_CUTOFF_ORDERS,
    angles: Sequence[float] = DEFAULT_ANGLES,
    alpha: float = 1.0,
    quad_tol: float = DEFAULT_QUAD_TOL,
) -> ParityReport:
    """Collect the numerical evidence that the high-ℓ part of the energy has no real part.

    Two checks are run: the log-derivative of the cross product is even in y for every ℓ
    in ell_list, and every cutoff integral of an even power is purely imaginary, by closed
    form and by quadrature on each rotated ray in ``angles``.
    """
    if not ell_list:
        raise DomainError('ell_list', list(ell_list), 'at least one angular index is needed')
    if not y_grid:
        raise DomainError('y_grid', list(y_grid), 'at least one grid point is needed')

    with operation_timer('verify_ebar_vanishes', a=geometry.a, b=geometry.b, ells=list(ell_list)):
        fits = [parity_fit(ell, y_grid, geometry.lambda_, max_power) for ell in ell_list]
        checks = [
            check_cutoff(n, ell + 0.5, geometry.b, alpha, phi, tol=quad_tol)
            for ell in ell_list
            for n in cutoff_orders
            for phi in angles
        ]

    return ParityReport(
        geometry=geometry,
        ell_list=list(ell_list),
        y_grid=[float(y) for y in y_grid],
        insufficient_grid=any(fit.insufficient_grid for fit in fits),
        fits=fits,
        cutoff_checks=checks,
    )
