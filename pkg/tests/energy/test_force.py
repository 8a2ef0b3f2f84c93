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
from casimir_spheres.core.common.errors import ArgumentError, StepTooSmallError
from casimir_spheres.core.common.models import Method, Variant
from casimir_spheres.core.energy.closed_form import closed_form_full
from casimir_spheres.core.energy.force import force, geometry_at_gap
from tests.fixtures import THIN_SHELL
from unittest.mock import MagicMock, patch


def _analytic_force(geometry):
    s2, d = geometry.a * geometry.b, geometry.d
    return -(math.pi**3 / 360) * (3 * s2 / d**4 + 5 / (4 * math.pi**2 * d**2))


def test_closed_form_force_matches_derivative():
    """Test the central difference against the derivative of the full-sphere closed form."""
    assert force(THIN_SHELL, Method.CLOSED_FORM, 1e-4) == pytest.approx(
        _analytic_force(THIN_SHELL), rel=1e-6
    )


@pytest.mark.parametrize('variant', [Variant.FULL_SPHERE, Variant.HALF_SPHERE])
def test_force_is_attractive(variant):
    """Test that the generalized force pulls the gap shut."""
    assert force(THIN_SHELL, Method.CLOSED_FORM, 1e-3, variant=variant) < 0


@pytest.mark.parametrize('rel_step', [1e-7, 0.02, 0.0, -1e-3])
def test_force_rejects_step_out_of_range(rel_step):
    """Test that steps outside [1e-6, 1e-2] raise ArgumentError."""
    with pytest.raises(ArgumentError):
        force(THIN_SHELL, Method.CLOSED_FORM, rel_step)


def test_force_step_too_small():
    """Test that an energy change below the noise raises StepTooSmallError."""
    flat = MagicMock(e_total=-1.0)
    with patch('casimir_spheres.core.energy.force.energy_breakdown', return_value=flat):
        with pytest.raises(StepTooSmallError):
            force(THIN_SHELL, Method.NUMERIC, 1e-5, quad_tol=1e-10)


@pytest.mark.parametrize('mean_radius,d', [(1.0, 0.1), (3.0, 0.5), (0.2, 0.01)])
def test_geometry_at_gap(mean_radius, d):
    """Test that the built geometry has the requested √(ab) and gap."""
    geometry = geometry_at_gap(mean_radius, d)
    assert geometry.sqrt_ab == pytest.approx(mean_radius, rel=1e-12)
    assert geometry.d == pytest.approx(d, rel=1e-10)


def test_force_richardson_consistency():
    """Test that halving the step changes the force by less than 1%."""
    coarse = force(THIN_SHELL, Method.CLOSED_FORM, 1e-3)
    fine = force(THIN_SHELL, Method.CLOSED_FORM, 5e-4)
    assert abs(fine - coarse) / abs(fine) < 1e-2


def test_force_follows_inverse_cube_law():
    """Test that the force is about −3|E|/d for a thin gap."""
    energy = closed_form_full(THIN_SHELL).e_total
    assert force(THIN_SHELL, Method.CLOSED_FORM, 1e-4) == pytest.approx(
        -3 * abs(energy) / THIN_SHELL.d, rel=1e-2
    )
