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

from ..common.errors import ArgumentError, DomainError
from ..common.models import LommelResiduals, LommelSeries, LommelTerm
from .cross_product import cross_product


SERIES_ORDERS = (2, 3, 4, 5, 6)


def _term(order: int, epsilon: float, nu: float, z: float) -> float:
    """Coefficient of (1 − λ²)^order in z·d/dz ln f, times (1 − λ²)^order."""
    z2 = z * z
    if order == 2:
        return epsilon**2 * z2 / 12
    if order == 3:
        return epsilon**3 * z2 / 24
    if order == 4:
        return epsilon**4 / 720 * (z2 * (19 - nu**2) - z2**2)
    if order == 5:
        return -(epsilon**5) / 1440 * (3 * z2 * (nu**2 - 9) + 2 * z2**2)
    return (
        epsilon**6
        / 120960
        * (z2 * (4 * nu**4 - 290 * nu**2 + 1726) + z2**2 * (8 * nu**2 - 149) + 4 * z2**3)
    )


def lommel_terms(nu_ell: int, y: float, lambda_: float, max_order: int = 6) -> LommelSeries:
    """Evaluate every series order k = 2..6 at z = νy."""
    if max_order not in SERIES_ORDERS:
        raise ArgumentError('max_k', max_order, 'series orders 2 to 6 are available')
    if not 0 < lambda_ < 1:
        raise DomainError('lambda', lambda_, 'radius ratio must lie in (0, 1)')
    if not y > 0:
        raise DomainError('y', y, 'rescaled frequency must be positive')
    nu = nu_ell + 0.5
    epsilon = 1 - lambda_**2
    z = nu * y
    coefficients = [
        LommelTerm(order=k, epsilon_power=epsilon**k, value=_term(k, epsilon, nu, z))
        for k in SERIES_ORDERS
    ]
    return LommelSeries(
        lambda_=lambda_, nu=nu, y=y, coefficients=coefficients, max_order=max_order
    )


def lommel_log_deriv(nu_ell: int, y: float, lambda_: float, max_k: int) -> float:
    """Series for z·d/dz ln f in powers of (1 − λ²), truncated after order max_k.

    Only even powers of z = νy occur, so on the rotated ray z·e^{−iφ} each z^{2m} term picks
    up a pure phase e^{−2imφ}.
    """
    return lommel_terms(nu_ell, y, lambda_, max_order=max_k).total


def lommel_residuals(nu_ell: int, y: float, lambda_: float) -> LommelResiduals:
    """Compare each truncation of the series with the direct log-derivative.

    Orders whose residual does not drop below the previous order's are listed in
    ``non_monotone_orders``; at large ν the ν²-growing coefficients make this common.
    """
    direct = cross_product(nu_ell, y, lambda_).log_deriv
    series = lommel_terms(nu_ell, y, lambda_)
    residuals = []
    partial = 0.0
    for term in series.coefficients:
        partial += term.value
        residuals.append(abs(partial - direct))
    non_monotone = [
        order
        for order, previous, current in zip(SERIES_ORDERS[1:], residuals, residuals[1:])
        if current >= previous
    ]
    return LommelResiduals(
        lambda_=lambda_,
        nu=series.nu,
        y=y,
        direct=direct,
        residuals=residuals,
        monotone=not non_monotone,
        non_monotone_orders=non_monotone,
    )
