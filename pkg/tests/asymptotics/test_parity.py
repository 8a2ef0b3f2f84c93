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
import pytest
from casimir_spheres.core.asymptotics.parity import (
    check_cutoff,
    default_y_grid,
    parity_fit,
    verify_ebar_vanishes,
)
from casimir_spheres.core.common.errors import DomainError, ParityFitError
from casimir_spheres.core.common.models import CrossProduct
from tests.fixtures import THIN_SHELL
from unittest.mock import patch


def test_default_y_grid():
    """Test the 40-point log-spaced default grid on [0.01, 0.1]."""
    grid = default_y_grid()
    assert len(grid) == 40
    assert grid[0] == pytest.approx(0.01)
    assert grid[-1] == pytest.approx(0.1)
    assert grid[1] / grid[0] == pytest.approx(grid[-1] / grid[-2])


@pytest.mark.parametrize('ell', [10, 30])
def test_log_derivative_is_even(ell):
    """Test that odd-power coefficients vanish to noise level at the default basis."""
    fit = parity_fit(ell, default_y_grid(), THIN_SHELL.lambda_)
    assert not fit.insufficient_grid
    assert fit.odd_consistent_with_zero
    assert fit.even_fit_at_noise
    assert len(fit.even_coefficients) == 6
    assert len(fit.odd_coefficients) == 5
    assert fit.condition_number < 1e14


def _odd_sample(ell, y, lambda_):
    return CrossProduct(
        nu=ell + 0.5,
        y=y,
        lambda_=lambda_,
        value=1.0,
        log_deriv=y**2 + 0.1 * y**3,
        log_deriv_noise=1e-16,
    )


@patch('casimir_spheres.core.asymptotics.parity.cross_product', side_effect=_odd_sample)
def test_detects_odd_component(mock_cross_product):
    """Test that a planted y³ term fails both parity criteria."""
    fit = parity_fit(10, default_y_grid(), 0.9)
    assert not fit.odd_consistent_with_zero
    assert not fit.even_fit_at_noise
    assert mock_cross_product.call_count == 40


def test_insufficient_grid_is_reported():
    """Test that fewer points than basis functions are flagged, not raised."""
    fit = parity_fit(10, [0.01, 0.02, 0.03, 0.04, 0.05], 0.9)
    assert fit.insufficient_grid
    assert fit.points == 5
    assert fit.odd_coefficients == []


def test_duplicate_points_count_once():
    """Test that repeated grid points do not count towards the basis size."""
    fit = parity_fit(10, [0.05] * 20, 0.9)
    assert fit.insufficient_grid
    assert fit.points == 1


def test_ill_conditioned_grid_raises():
    """Test that a grid squeezed into a tiny interval raises ParityFitError."""
    grid = [0.05 * (1 + 1e-9 * k) for k in range(12)]
    with pytest.raises(ParityFitError, match='wider range'):
        parity_fit(10, grid, 0.9)


def test_rejects_basis_without_odd_power():
    """Test that max_power below 3 raises DomainError."""
    with pytest.raises(DomainError):
        parity_fit(10, default_y_grid(), 0.9, max_power=2)


@pytest.mark.parametrize('n', [0, 1, 2, 3])
def test_check_cutoff_is_imaginary(n):
    """Test that every even-power cutoff integral is purely imaginary."""
    check = check_cutoff(n, 10.5, 1.1, 1.0, math.pi / 4)
    assert check.purely_imaginary
    assert check.relative_error < 1e-8


def test_verify_ebar_vanishes():
    """Test the full parity report for a thin shell."""
    report = verify_ebar_vanishes(THIN_SHELL, [10, 30], default_y_grid())
    assert report.parity_holds
    assert not report.insufficient_grid
    assert [fit.ell for fit in report.fits] == [10, 30]
    assert len(report.cutoff_checks) == 2 * 4 * 3


def test_verify_ebar_insufficient_grid():
    """Test that a short grid yields a report that does not claim parity."""
    report = verify_ebar_vanishes(THIN_SHELL, [10], [0.01, 0.02, 0.03], cutoff_orders=[0])
    assert report.insufficient_grid
    assert not report.parity_holds


@pytest.mark.parametrize('ell_list,y_grid', [([], [0.01]), ([10], [])])
def test_verify_ebar_rejects_empty_inputs(ell_list, y_grid):
    """Test that empty index lists or grids raise DomainError."""
    with pytest.raises(DomainError):
        verify_ebar_vanishes(THIN_SHELL, ell_list, y_grid)
