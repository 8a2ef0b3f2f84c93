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
from ..common.config import MAX_ELL, MAX_ROOTS
from ..common.errors import ArgumentError, BesselRangeError, BracketError, DomainError
from ..common.models import Geometry, RegulatedModeSum, RootTable, SpectrumDeviation
from .frequency import asymptotic_spectrum, normalized_freq_fn
from loguru import logger
from scipy import optimize


SCAN_STEP_FRACTION = 0.45
MAX_HALVINGS = 6
ROOT_RTOL = 1e-14
_CHUNK = 256


def scan_start(geometry: Geometry, ell: int) -> float:
    """Lower bound on the first eigenfrequency, slightly relaxed.

    For Dirichlet conditions ω² ≥ (π/d)² + ℓ(ℓ+1)/b², so nothing is lost by starting the
    scan there, and N_ν is never evaluated where it overflows.
    """
    bound = math.sqrt((math.pi / geometry.d) ** 2 + ell * (ell + 1) / geometry.b**2)
    return 0.999 * bound


def _scan(
    geometry: Geometry, ell: int, start: float, step: float, count: int, limit: int
) -> list[tuple[float, float]]:
    """Walk a uniform grid from start until count sign changes are bracketed."""
    brackets: list[tuple[float, float]] = []
    offset = 0
    while len(brackets) < count:
        if offset > limit:
            raise BracketError(ell, start, start + offset * step, 'scan exhausted its point budget')
        grid = start + step * np.arange(offset, offset + _CHUNK + 1)
        values = normalized_freq_fn(geometry, ell, grid)
        if not np.all(np.isfinite(values)):
            bad = float(grid[~np.isfinite(values)][0])
            raise BesselRangeError('J·N cross product', ell, bad, 'non-finite frequency function')
        positive = values > 0
        for k in np.flatnonzero(positive[:-1] != positive[1:]):
            brackets.append((float(grid[k]), float(grid[k + 1])))
            if len(brackets) == count:
                break
        offset += _CHUNK
    return brackets


def _count_sign_changes(geometry: Geometry, ell: int, start: float, stop: float, step: float) -> int:
    points = int(round((stop - start) / step))
    grid = start + step * np.arange(points + 1)
    positive = normalized_freq_fn(geometry, ell, grid) > 0
    return int(np.count_nonzero(positive[:-1] != positive[1:]))


def _check_request(ell: int, n_max: int) -> None:
    if ell < 0:
        raise DomainError('ell', ell, 'angular index must be non-negative')
    if ell > MAX_ELL:
        raise ArgumentError('ell', ell, f'root tables are built up to ell={MAX_ELL}')
    if n_max < 1:
        raise DomainError('n_max', n_max, 'at least one root must be requested')
    if n_max > MAX_ROOTS:
        raise ArgumentError('n_max', n_max, f'root tables hold at most {MAX_ROOTS} roots')


def find_roots(geometry: Geometry, ell: int, n_max: int) -> RootTable:
    """Find the first n_max eigenfrequencies of angular index ℓ.

    Sign changes of the normalized frequency function are bracketed on a grid of step
    0.45·π/d and refined with Brent's method. A second pass at half the step must find the
    same number of sign changes; otherwise two roots shared a grid cell, the step is halved
    and the scan repeated.

    Raises:
        BracketError: if the counts still disagree after the allowed halvings.
    """
    _check_request(ell, n_max)
    start = scan_start(geometry, ell)
    step = SCAN_STEP_FRACTION * math.pi / geometry.d
    # The first root lies below the asymptotic estimate plus a few spacings.
    budget = int(4 * (asymptotic_spectrum(geometry, ell, n_max) - start) / step) + 4 * _CHUNK

    for halving in range(MAX_HALVINGS + 1):
        brackets = _scan(geometry, ell, start, step, n_max, budget)
        stop = brackets[-1][1]
        refined_count = _count_sign_changes(geometry, ell, start, stop, step / 2)
        if refined_count == n_max:
            break
        logger.warning(
            'Root scan for ell={} found {} roots at step {} but {} at half step; halving',
            ell,
            n_max,
            step,
            refined_count,
        )
        step /= 2
        budget *= 2
    else:
        logger.error('Root scan for ell={} did not stabilise after {} halvings', ell, MAX_HALVINGS)
        raise BracketError(ell, start, stop, f'bracket count unstable after {MAX_HALVINGS} halvings')

    def residual(omega: float) -> float:
        return float(normalized_freq_fn(geometry, ell, omega))

    roots = [
        optimize.brentq(residual, lower, upper, xtol=np.finfo(float).tiny, rtol=ROOT_RTOL)
        for lower, upper in brackets
    ]
    asymptotic = [asymptotic_spectrum(geometry, ell, n) for n in range(1, n_max + 1)]
    return RootTable(geometry=geometry, ell=ell, roots=roots, asymptotic=asymptotic, scan_step=step)


def spectrum_check(geometry: Geometry, ell_max: int, n_max: int) -> list[SpectrumDeviation]:
    """Compare numerical and evenly spaced spectra for every ℓ ≤ ell_max."""
    if ell_max < 0:
        raise DomainError('ell_max', ell_max, 'angular index must be non-negative')
    rows = []
    for ell in range(ell_max + 1):
        table = find_roots(geometry, ell, n_max)
        deviations = table.relative_deviation
        spacing = None
        if n_max > 1:
            spacing = (table.roots[-1] - table.roots[-2]) * geometry.d / math.pi
        rows.append(
            SpectrumDeviation(
                ell=ell,
                n_max=n_max,
                max_rel_dev=max(deviations),
                rel_dev_at_n_max=deviations[-1],
                last_spacing_ratio=spacing,
            )
        )
    return rows


def regulated_mode_sum(
    geometry: Geometry, ell: int, alpha: float, n_max: int
) -> RegulatedModeSum:
    """Exponentially cut off mode sum Σ_n ω_n·e^{−αω_n} for one angular index.

    The first n_max terms use the numerical roots and form the head; the remainder uses the
    evenly spaced spectrum and forms the tail. The error estimate scales the tail by the
    relative root deviation at n_max.
    """
    if not alpha > 0:
        raise DomainError('alpha', alpha, 'cutoff must be positive')
    table = find_roots(geometry, ell, n_max)
    pieces = [omega * math.exp(-alpha * omega) for omega in table.roots]
    head = math.fsum(pieces)

    tail_terms = []
    n = n_max + 1
    while True:
        omega = asymptotic_spectrum(geometry, ell, n)
        term = omega * math.exp(-alpha * omega)
        tail_terms.append(term)
        # ωe^{−αω} decreases once αω > 1
        if alpha * omega > 1 and term < 1e-18 * (head + math.fsum(tail_terms)):
            break
        n += 1
    tail = math.fsum(tail_terms)
    deviation = table.relative_deviation[-1]
    omega_last = table.roots[-1]
    estimate = deviation * tail * (1 + alpha * omega_last) + 1e-18 * abs(head + tail)
    return RegulatedModeSum(
        ell=ell,
        alpha=alpha,
        n_max=n_max,
        value=head + tail,
        head=head,
        tail=tail,
        truncation_error_estimate=estimate,
        pieces=pieces,
    )
