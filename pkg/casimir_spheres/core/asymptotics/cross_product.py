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
from ..common.errors import BesselRangeError, DomainError
from ..common.models import CrossProduct
from ..special.bessel import scaled_modified


# Rounding budget per Bessel evaluation and arithmetic step.
_EPS_BUDGET = 64 * np.finfo(float).eps


def _check_arguments(nu_ell: int, y: float, lambda_: float) -> None:
    if nu_ell < 0:
        raise DomainError('nu_ell', nu_ell, 'angular index must be non-negative')
    if not (math.isfinite(y) and y > 0):
        raise DomainError('y', y, 'rescaled frequency must be positive')
    if not 0 < lambda_ < 1:
        raise DomainError('lambda', lambda_, 'radius ratio must lie in (0, 1)')


def cross_product(nu_ell: int, y: float, lambda_: float) -> CrossProduct:
    """Modified Bessel cross product f = I_ν(z)K_ν(λz) − I_ν(λz)K_ν(z) at z = νy.

    Only scaled Bessel values are formed. Writing p = z and q = λz,
    I(p)K(q) = [e^{−p}I(p)]·[e^{q}K(q)]·e^{p−q}, and the common factor e^{p−q} is kept out
    of every product, so neither large arguments nor large orders overflow an intermediate.

    ``log_deriv`` is z·d/dz ln f from the derivative identities
    I′_ν = I_{ν−1} − (ν/z)I_ν and K′_ν = −K_{ν−1} − (ν/z)K_ν; the ν/z parts collapse to
    −2ν. The prefactor −2/π carried by the physical cross product cancels in it and is not
    applied to ``value``.
    """
    _check_arguments(nu_ell, y, lambda_)
    nu = nu_ell + 0.5
    p = nu * y
    q = lambda_ * p
    i_p, k_p = (float(v) for v in scaled_modified(nu, p))
    i_q, k_q = (float(v) for v in scaled_modified(nu, q))
    i_p_lower, k_p_lower = (float(v) for v in scaled_modified(nu - 1, p))
    i_q_lower, k_q_lower = (float(v) for v in scaled_modified(nu - 1, q))
    damping = math.exp(-2 * (p - q))

    leading = i_p * k_q
    trailing = i_q * k_p * damping
    scaled = leading - trailing
    if not (math.isfinite(leading) and math.isfinite(trailing) and scaled > 0):
        raise BesselRangeError('I·K cross product', nu_ell, p, f'scaled value {scaled!r}')

    derivative_terms = (
        p * i_p_lower * k_q,
        -q * i_p * k_q_lower,
        -q * i_q_lower * k_p * damping,
        p * i_q * k_p_lower * damping,
    )
    ratio = math.fsum(derivative_terms) / scaled
    log_deriv = ratio - 2 * nu

    value = scaled * math.exp(p - q)
    if not math.isfinite(value):
        raise BesselRangeError('I·K cross product', nu_ell, p, 'unscaled value overflows')

    noise = _EPS_BUDGET * (
        abs(ratio) * (abs(leading) + abs(trailing)) + sum(abs(t) for t in derivative_terms)
    ) / scaled
    return CrossProduct(
        nu=nu,
        y=y,
        lambda_=lambda_,
        value=value,
        log_deriv=log_deriv,
        log_deriv_noise=noise,
    )
