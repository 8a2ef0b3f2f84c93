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

"""Half-integer order Bessel functions.

All evaluation goes through ``scipy.special``, whose AMOS-based routines run the
recurrences in their stable directions. The public pair functions validate the domain and
refuse values that do not fit in double precision; the real-order helpers are vectorized
and unchecked, for use inside scans and cross products.
"""

import math
import numpy as np
from ..common.config import MAX_ELL
from ..common.errors import ArgumentError, BesselRangeError, DomainError
from ..common.models import OrdinaryBesselPair, ScaledBesselPair
from numpy.typing import ArrayLike, NDArray
from scipy import special


def _check_ell(ell: int) -> None:
    if ell < 0:
        raise DomainError('ell', ell, 'angular index must be non-negative')
    if ell > MAX_ELL:
        raise ArgumentError('ell', ell, f'angular index is supported up to {MAX_ELL}')


def _check_argument(x: float) -> None:
    if not (math.isfinite(x) and x > 0):
        raise DomainError('x', x, 'argument must be positive and finite')


def ordinary(nu: ArrayLike, x: ArrayLike) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Return J_ν(x) and N_ν(x) for real order ν, elementwise."""
    return special.jv(nu, x), special.yv(nu, x)


def scaled_modified(nu: ArrayLike, x: ArrayLike) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Return e^{−x}·I_ν(x) and e^{x}·K_ν(x) for real order ν and x > 0, elementwise."""
    return special.ive(nu, x), special.kve(nu, x)


def eval_ordinary(ell: int, x: float) -> OrdinaryBesselPair:
    """Evaluate J_{ℓ+1/2}(x) and N_{ℓ+1/2}(x).

    Raises:
        DomainError: if x is not positive.
        ArgumentError: if ell exceeds the supported range.
        BesselRangeError: if N overflows, which happens once x is small compared to ℓ.
    """
    _check_ell(ell)
    _check_argument(x)
    j_val, y_val = (float(v) for v in ordinary(ell + 0.5, x))
    if not math.isfinite(j_val):
        raise BesselRangeError('J', ell, x, f'J evaluated to {j_val}')
    if not math.isfinite(y_val):
        raise BesselRangeError('N', ell, x, f'N overflows ({y_val})')
    return OrdinaryBesselPair(order_ell=ell, argument=x, j_val=j_val, y_val=y_val)


def eval_modified_scaled(ell: int, x: float) -> ScaledBesselPair:
    """Evaluate e^{−x}·I_{ℓ+1/2}(x) and e^{x}·K_{ℓ+1/2}(x).

    Raises:
        DomainError: if x is not positive.
        ArgumentError: if ell exceeds the supported range.
        BesselRangeError: if either scaled value leaves the double range, which only
            happens for x far below ℓ.
    """
    _check_ell(ell)
    _check_argument(x)
    i_scaled, k_scaled = (float(v) for v in scaled_modified(ell + 0.5, x))
    if not (math.isfinite(i_scaled) and i_scaled > 0):
        raise BesselRangeError('I', ell, x, f'scaled I evaluated to {i_scaled}')
    if not (math.isfinite(k_scaled) and k_scaled > 0):
        raise BesselRangeError('K', ell, x, f'scaled K evaluated to {k_scaled}')
    return ScaledBesselPair(order_ell=ell, argument=x, i_scaled=i_scaled, k_scaled=k_scaled)


def ordinary_wronskian(ell: int, x: float) -> float:
    """Return J_ν N_ν′ − J_ν′ N_ν at ν = ℓ + 1/2, which equals 2/(πx).

    The derivatives come from C′_ν = C_{ν−1} − (ν/x)C_ν, so the ν/x parts cancel and the
    Wronskian reduces to J_ν N_{ν−1} − J_{ν−1} N_ν.
    """
    pair = eval_ordinary(ell, x)
    j_lower, y_lower = (float(v) for v in ordinary(ell - 0.5, x))
    return pair.j_val * y_lower - j_lower * pair.y_val


def modified_wronskian(ell: int, x: float) -> float:
    """Return I_ν K_ν′ − I_ν′ K_ν at ν = ℓ + 1/2, which equals −1/x.

    With I′_ν = I_{ν−1} − (ν/x)I_ν and K′_ν = −K_{ν−1} − (ν/x)K_ν this is
    −(I_ν K_{ν−1} + I_{ν−1} K_ν); the exponential scalings cancel in each product.
    """
    pair = eval_modified_scaled(ell, x)
    i_lower, k_lower = (float(v) for v in scaled_modified(ell - 0.5, x))
    return -(pair.i_scaled * k_lower + i_lower * pair.k_scaled)
