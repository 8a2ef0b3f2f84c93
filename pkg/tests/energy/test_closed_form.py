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
from casimir_spheres.core.common.errors import DomainError, IdentityMismatchError
from casimir_spheres.core.common.models import Geometry, Method, Variant
from casimir_spheres.core.energy.closed_form import (
    area,
    closed_form_full,
    closed_form_half,
    geometry_from_eta,
    leading_energy,
    limit_scan,
    plate_limit_per_area,
)
from hypothesis import given
from hypothesis import strategies as st
from tests.fixtures import THIN_SHELL, THIN_SHELL_CLOSED_FORM_ENERGY
from unittest.mock import patch


ZETA4 = math.pi**4 / 90


def test_full_sphere_thin_shell():
    """Test the full-sphere energy of a = 1, b = 1.1, about −94.85."""
    breakdown = closed_form_full(THIN_SHELL)
    assert breakdown.e_total == pytest.approx(THIN_SHELL_CLOSED_FORM_ENERGY, rel=1e-14)
    assert breakdown.e_total == pytest.approx(-94.85, abs=5e-3)
    assert breakdown.e_bar == 0.0
    assert breakdown.method is Method.CLOSED_FORM
    assert [c.name for c in breakdown.corrections] == ['eta_squared']


def test_full_sphere_leading_term():
    """Test that the leading term is −ζ(4)·ab/(4πd³) and the bracket correction is positive."""
    breakdown = closed_form_full(THIN_SHELL)
    leading = -ZETA4 * 1.1 / (4 * math.pi * 0.1**3)
    assert breakdown.leading == pytest.approx(leading, rel=1e-12)
    assert abs(breakdown.e_tilde) > abs(breakdown.leading)
    eta2 = THIN_SHELL.eta**2
    expected = eta2 * (math.pi**2 / 6) / (12 * ZETA4)
    assert (breakdown.e_tilde - breakdown.leading) / breakdown.leading == pytest.approx(
        expected, rel=1e-10
    )


@given(
    a=st.floats(min_value=0.01, max_value=100.0),
    eta=st.floats(min_value=1e-3, max_value=0.5),
)
def test_two_forms_agree(a, eta):
    """Test that the ζ form and the explicit-π form agree on random geometries."""
    breakdown = closed_form_full(geometry_from_eta(a, eta))
    geometry = breakdown.geometry
    ab, d = geometry.a * geometry.b, geometry.d
    pi_form = -(math.pi**3 / 360) * (ab / d**3) * (1 + 5 / (4 * math.pi**2) * (d**2 / ab))
    assert breakdown.e_total == pytest.approx(pi_form, rel=1e-14)
    assert breakdown.e_total < 0


@patch('casimir_spheres.core.energy.closed_form.IDENTITY_TOLERANCE', -1.0)
def test_two_form_mismatch_raises():
    """Test that disagreeing forms raise IdentityMismatchError."""
    with pytest.raises(IdentityMismatchError):
        closed_form_full(THIN_SHELL)


def test_half_sphere_corrections():
    """Test the four named bracket terms of the half sphere."""
    geometry = geometry_from_eta(1.0, 0.1)
    breakdown = closed_form_half(geometry)
    terms = {c.name: c.bracket_term for c in breakdown.corrections}
    eta = geometry.eta
    zeta3 = 1.2020569031595942
    assert list(terms) == ['eta_linear', 'eta_cubed_zeta4', 'eta_squared', 'eta_cubed_inverse_pi']
    assert terms['eta_linear'] == pytest.approx(-(math.pi / 4) * eta * zeta3 / ZETA4, rel=1e-14)
    assert terms['eta_cubed_zeta4'] == pytest.approx((math.pi / 24) * eta**3 / ZETA4, rel=1e-14)
    assert terms['eta_cubed_inverse_pi'] == pytest.approx(
        -(eta**3) / (4 * math.pi * ZETA4), rel=1e-14
    )
    assert breakdown.bracket == pytest.approx(1 + sum(terms.values()), rel=1e-15)
    assert breakdown.e_total == pytest.approx(breakdown.leading * breakdown.bracket, rel=1e-15)
    for correction in breakdown.corrections:
        assert correction.energy == pytest.approx(breakdown.leading * correction.bracket_term)


def test_half_sphere_is_half_of_full_sphere():
    """Test that the half-sphere energy tends to half the full-sphere energy."""
    geometry = geometry_from_eta(1.0, 0.01)
    ratio = closed_form_half(geometry).e_total / closed_form_full(geometry).e_total
    assert abs(ratio - 0.5) <= 1e-2 * 0.5


def test_half_sphere_printed_per_area():
    """Test that the printed half-sphere per-area value carries the 1/(16π) prefactor."""
    breakdown = closed_form_half(THIN_SHELL)
    assert breakdown.per_area == pytest.approx(breakdown.e_total / (2 * math.pi), rel=1e-15)
    assert breakdown.per_area_printed == pytest.approx(breakdown.per_area * math.pi, rel=1e-15)
    full = closed_form_full(THIN_SHELL)
    assert full.per_area_printed == full.per_area


@pytest.mark.parametrize(
    'variant,expected', [(Variant.FULL_SPHERE, 4 * math.pi), (Variant.HALF_SPHERE, 2 * math.pi)]
)
def test_area(variant, expected):
    """Test the inner surface areas."""
    assert area(Geometry(a=1.0, b=2.0), variant) == pytest.approx(expected)


def test_leading_energy_half_is_half():
    """Test that the half-sphere leading term is half the full-sphere one."""
    assert leading_energy(THIN_SHELL, Variant.HALF_SPHERE) == pytest.approx(
        leading_energy(THIN_SHELL, Variant.FULL_SPHERE) / 2, rel=1e-15
    )


def test_plate_limit():
    """Test −ζ(4)/(16π²d³) = −π²/(1440d³)."""
    assert plate_limit_per_area(0.1) == pytest.approx(-(math.pi**2) / (1440 * 0.1**3), rel=1e-14)
    with pytest.raises(DomainError):
        plate_limit_per_area(0.0)


@pytest.mark.parametrize('eta', [0.2, 0.1, 0.05, 0.02])
def test_geometry_from_eta(eta):
    """Test that the built geometry has the requested gap ratio."""
    geometry = geometry_from_eta(2.0, eta)
    assert geometry.a == 2.0
    assert geometry.eta == pytest.approx(eta, rel=1e-12)


def test_geometry_from_eta_rejects_non_positive():
    """Test that η ≤ 0 raises DomainError."""
    with pytest.raises(DomainError):
        geometry_from_eta(1.0, 0.0)


def test_limit_scan_bracket_identity():
    """Test that per_area over the plate value is (b/a)·[1 + (5/4π²)η²]."""
    rows = limit_scan(1.0, [0.2, 0.1, 0.05, 0.02], Variant.FULL_SPHERE)
    assert [row.eta for row in rows] == [0.2, 0.1, 0.05, 0.02]
    for row in rows:
        correction = 5 / (4 * math.pi**2) * row.eta**2
        assert row.bracket_ratio == pytest.approx(1 + correction, rel=1e-12)
        assert row.bracket_ratio - 1 == pytest.approx(correction, abs=1e-13)
        assert row.ratio == pytest.approx(row.bracket_ratio * row.b, rel=1e-14)
    ratios = [row.ratio for row in rows]
    assert all(abs(later - 1) < abs(earlier - 1) for earlier, later in zip(ratios, ratios[1:]))


def test_limit_scan_half_sphere_approaches_plate():
    """Test that the half-sphere bracket ratio tends to 1 as the gap closes."""
    rows = limit_scan(1.0, [0.1, 0.01, 0.001], Variant.HALF_SPHERE)
    offsets = [abs(row.bracket_ratio - 1) for row in rows]
    assert offsets[0] > offsets[1] > offsets[2]
    assert offsets[2] < 1e-2


@pytest.mark.parametrize('k', [0.5, 2.0, 10.0])
@pytest.mark.parametrize('pipeline', [closed_form_full, closed_form_half])
def test_scale_invariance(k, pipeline):
    """Test that E(ka, kb) = E(a, b)/k."""
    assert pipeline(THIN_SHELL.scaled(k)).e_total == pytest.approx(
        pipeline(THIN_SHELL).e_total / k, rel=1e-10
    )


def test_half_sphere_linear_correction_dominates():
    """Test that at a = 1, b = 1.02 the linear-η term is the largest correction and negative."""
    breakdown = closed_form_half(Geometry(a=1.0, b=1.02))
    terms = {c.name: c.bracket_term for c in breakdown.corrections}
    assert terms['eta_linear'] < 0
    assert max(terms, key=lambda name: abs(terms[name])) == 'eta_linear'


@pytest.mark.parametrize('eta', [0.5, 0.3, 0.1, 0.03, 0.01, 0.001])
def test_half_sphere_energy_is_negative(eta):
    """Test that the half-sphere bracket stays positive, so E < 0, for η ≤ 0.5."""
    breakdown = closed_form_half(geometry_from_eta(1.0, eta))
    assert breakdown.bracket > 0
    assert breakdown.e_total < 0


@pytest.mark.parametrize('d,expected', [(0.1, -6.853891945200942), (1.0, -0.006853891945200942)])
def test_plate_limit_values(d, expected):
    """Test the plate value at hand-evaluated separations."""
    assert plate_limit_per_area(d) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize('k', [0.5, 3.0])
def test_plate_limit_scaling(k):
    """Test that the plate value scales as d⁻³."""
    assert plate_limit_per_area(0.2 * k) == pytest.approx(plate_limit_per_area(0.2) / k**3, rel=1e-13)
