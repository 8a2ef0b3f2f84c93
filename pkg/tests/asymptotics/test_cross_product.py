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
import mpmath
import pytest
from casimir_spheres.core.asymptotics.cross_product import cross_product
from casimir_spheres.core.common.errors import DomainError
from hypothesis import given
from hypothesis import strategies as st


def _oracle(nu: float, z: float, lambda_: float) -> tuple[float, float]:
    """30-digit value and z·d/dz ln f of the cross product."""
    with mpmath.workdps(30):

        def f(x):
            return mpmath.besseli(nu, x) * mpmath.besselk(nu, lambda_ * x) - mpmath.besseli(
                nu, lambda_ * x
            ) * mpmath.besselk(nu, x)

        value = f(z)
        log_deriv = z * mpmath.diff(f, z) / value
        return float(value), float(log_deriv)


@pytest.mark.parametrize('y', [0.01, 0.3, 2.0, 40.0])
@pytest.mark.parametrize('lambda_', [0.5, 0.9, 0.99])
def test_order_one_half_closed_form(y, lambda_):
    """Test f = sinh(u)/(z√λ) and z·d/dz ln f = u coth u − 1 with u = z(1 − λ) at ℓ = 0."""
    z = 0.5 * y
    u = z * (1 - lambda_)
    result = cross_product(0, y, lambda_)
    assert result.value == pytest.approx(math.sinh(u) / (z * math.sqrt(lambda_)), rel=1e-11)
    assert result.log_deriv == pytest.approx(
        u / math.tanh(u) - 1, rel=1e-8, abs=max(1e-13, result.log_deriv_noise)
    )


@pytest.mark.parametrize(
    'ell,y,lambda_',
    [(1, 0.5, 0.9), (10, 0.05, 0.95), (10, 1.0, 0.8), (30, 0.02, 0.9), (100, 0.05, 0.95)],
)
def test_against_high_precision(ell, y, lambda_):
    """Test the value and log-derivative against mpmath."""
    nu = ell + 0.5
    value, log_deriv = _oracle(nu, nu * y, lambda_)
    result = cross_product(ell, y, lambda_)
    assert result.value == pytest.approx(value, rel=1e-10)
    assert result.log_deriv == pytest.approx(log_deriv, rel=1e-7, abs=1e3 * result.log_deriv_noise)


def test_large_argument_does_not_overflow():
    """Test that scaled evaluation survives arguments where unscaled I overflows."""
    result = cross_product(5, 200.0, 0.9)
    assert math.isfinite(result.log_deriv)
    assert result.log_deriv > 0


@given(
    ell=st.integers(min_value=0, max_value=60),
    y=st.floats(min_value=0.01, max_value=0.5),
    lambda_=st.floats(min_value=0.5, max_value=0.99),
)
def test_positive_and_noise_bounded(ell, y, lambda_):
    """Test that f is positive and its log-derivative carries a small rounding bound."""
    result = cross_product(ell, y, lambda_)
    assert result.value > 0
    assert 0 < result.log_deriv_noise < 1e-8 * max(1.0, abs(result.log_deriv) + 2 * result.nu)


@pytest.mark.parametrize(
    'nu_ell,y,lambda_',
    [(-1, 0.1, 0.9), (0, 0.0, 0.9), (0, -1.0, 0.9), (0, 0.1, 1.0), (0, 0.1, 0.0)],
)
def test_rejects_domain(nu_ell, y, lambda_):
    """Test that invalid orders, frequencies and ratios raise DomainError."""
    with pytest.raises(DomainError):
        cross_product(nu_ell, y, lambda_)
