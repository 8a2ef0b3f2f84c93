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
from casimir_spheres.core.common.errors import ArgumentError, IdentityMismatchError
from casimir_spheres.core.common.models import CalibrationCase, SummationVariant
from casimir_spheres.core.regularization.abel_plana import (
    AnalyticSummand,
    abel_plana_half_integer,
    abel_plana_integer,
    calibration_summand,
    calibration_target,
    mode_sum_regularized,
    mode_summand,
    run_calibration,
)
from casimir_spheres.core.regularization.branch_cut import branch_cut_F
from tests.fixtures import THIN_SHELL
from unittest.mock import patch


@pytest.mark.parametrize(
    'case,variant,expected',
    [
        (CalibrationCase.CONST, SummationVariant.INTEGER, -1 / 2),
        (CalibrationCase.LINEAR, SummationVariant.INTEGER, -1 / 12),
        (CalibrationCase.CUBIC, SummationVariant.INTEGER, 1 / 120),
        (CalibrationCase.CONST, SummationVariant.HALF_INTEGER, 0.0),
        (CalibrationCase.LINEAR, SummationVariant.HALF_INTEGER, 1 / 24),
        (CalibrationCase.CUBIC, SummationVariant.HALF_INTEGER, -7 / 960),
    ],
)
def test_calibration(case, variant, expected):
    """Test both engines on polynomial summands with known regularized sums."""
    result = run_calibration(case, variant, 1e-12)
    assert calibration_target(case, variant) == pytest.approx(expected, rel=1e-15)
    assert result.value == pytest.approx(expected, abs=1e-10)
    assert result.abs_error < 1e-10


def test_integer_engine_splits_boundary_and_cut():
    """Test that −f(0)/2 is the boundary term and the jump integral the rest."""
    result = abel_plana_integer(calibration_summand(CalibrationCase.LINEAR), 1e-12)
    assert result.boundary_term == 0.0
    assert result.cut_integral == pytest.approx(-1 / 12, abs=1e-12)
    constant = abel_plana_integer(calibration_summand(CalibrationCase.CONST), 1e-12)
    assert constant.boundary_term == -0.5
    assert constant.cut_integral == 0.0


def test_integer_engine_fifth_power():
    """Test a user-built summand: Σ n⁵ regularizes to ζ(−5) = −1/252."""
    summand = AnalyticSummand(f=lambda x: x**5, discontinuity=lambda t: 2 * t**5, label='f=x^5')
    assert abel_plana_integer(summand, 1e-12).value == pytest.approx(-1 / 252, abs=1e-10)


def test_half_integer_engine_has_no_boundary():
    """Test that the half-integer engine reports only the cut integral."""
    result = abel_plana_half_integer(calibration_summand(CalibrationCase.CUBIC), 1e-12)
    assert result.boundary_term == 0.0
    assert result.value == result.cut_integral


def test_engines_reject_bad_tolerance():
    """Test that quadrature tolerances outside the supported range raise ArgumentError."""
    with pytest.raises(ArgumentError):
        abel_plana_integer(calibration_summand(CalibrationCase.LINEAR), 1.0)


def test_mode_summand_jump():
    """Test that the jump vanishes below the branch point and is 2√((πt/d)² − ν²/(ab)) above."""
    summand = mode_summand(THIN_SHELL, 4)
    t0 = summand.branch_point
    assert t0 == pytest.approx(4.5 * THIN_SHELL.xi / (2 * math.pi))
    assert summand.discontinuity(0.5 * t0) == 0.0
    t = 2 * t0
    expected = 2 * math.sqrt((math.pi * t / 0.1) ** 2 - 4.5**2 / 1.1)
    assert summand.discontinuity(t) == pytest.approx(expected, rel=1e-12)
    assert summand.f(0.0) == pytest.approx(4.5 / math.sqrt(1.1), rel=1e-15)


@pytest.mark.parametrize('ell', [0, 3, 20])
def test_mode_sum_regularized(ell):
    """Test Reg Σ ω̃ = −ν/(2√(ab)) − (2/ν)·F(ν)."""
    nu = ell + 0.5
    result = mode_sum_regularized(THIN_SHELL, ell, 1e-10)
    assert result.boundary_term == pytest.approx(-nu / (2 * THIN_SHELL.sqrt_ab), rel=1e-15)
    expected = -2 * branch_cut_F(ell, THIN_SHELL, 1e-10) / nu
    assert result.cut_integral == pytest.approx(expected, rel=1e-8)


@patch('casimir_spheres.core.regularization.abel_plana.branch_cut_F', return_value=1.0)
def test_mode_sum_regularized_detects_mismatch(mock_branch_cut_f):
    """Test that disagreement with the branch-cut integral raises IdentityMismatchError."""
    with pytest.raises(IdentityMismatchError):
        mode_sum_regularized(THIN_SHELL, 3, 1e-10)
    mock_branch_cut_f.assert_called_once()
