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
from ..common.errors import ArgumentError, DomainError
from ..common.models import Geometry
from ..special.bessel import eval_ordinary, ordinary
from numpy.typing import ArrayLike, NDArray


def bessel_cross(ell: int, omega: float, first: float, second: float) -> float:
    """Return J_ν(ω·first)N_ν(ω·second) − J_ν(ω·second)N_ν(ω·first) at ν = ℓ + 1/2."""
    if not omega > 0:
        raise DomainError('omega', omega, 'frequency must be positive')
    outer = eval_ordinary(ell, omega * first)
    inner = eval_ordinary(ell, omega * second)
    return outer.j_val * inner.y_val - inner.j_val * outer.y_val


def freq_fn(geometry: Geometry, ell: int, omega: float) -> float:
    """Dirichlet frequency function J_ν(ωb)N_ν(ωa) − J_ν(ωa)N_ν(ωb).

    Its positive zeros in ω are the eigenfrequencies of angular index ℓ.
    """
    return bessel_cross(ell, omega, geometry.b, geometry.a)


def normalized_freq_fn(geometry: Geometry, ell: int, omega: ArrayLike) -> NDArray[np.float64]:
    """Frequency function multiplied by √(ωa·ωb), evaluated elementwise.

    The factor removes the 1/ω decay of the Bessel envelopes without moving any zero.
    """
    omega = np.asarray(omega, dtype=float)
    nu = ell + 0.5
    j_outer, y_outer = ordinary(nu, omega * geometry.b)
    j_inner, y_inner = ordinary(nu, omega * geometry.a)
    amplitude = omega * geometry.sqrt_ab
    return amplitude * (j_outer * y_inner - j_inner * y_outer)


def asymptotic_spectrum(geometry: Geometry, ell: int, n: int) -> float:
    """Evenly spaced approximation ω̃ = √((nπ/d)² + ν²/(ab)) to the n-th root."""
    if n < 1:
        raise DomainError('n', n, 'radial index starts at 1')
    nu = ell + 0.5
    return math.hypot(n * math.pi / geometry.d, nu / geometry.sqrt_ab)


def hankel_large_arg(ell: int, x: float) -> tuple[float, float]:
    """Two-term Hankel approximations of J_ν(x) and N_ν(x) for x ≫ ν.

    With χ = x − νπ/2 − π/4 and μ = 4ν²:

        J_ν(x) ≈ √(2/πx)·[cos χ − (μ − 1)/(8x)·sin χ]
        N_ν(x) ≈ √(2/πx)·[sin χ + (μ − 1)/(8x)·cos χ]

    The approximation is exact for ℓ = 0 and ℓ = 1, where the series terminates.
    """
    nu = ell + 0.5
    floor = max(10.0, 3 * nu)
    if x < floor:
        raise ArgumentError('x', x, f'Hankel expansion is used only for x ≥ {floor:g}')
    chi = x - nu * math.pi / 2 - math.pi / 4
    correction = (4 * nu**2 - 1) / (8 * x)
    envelope = math.sqrt(2 / (math.pi * x))
    j_val = envelope * (math.cos(chi) - correction * math.sin(chi))
    y_val = envelope * (math.sin(chi) + correction * math.cos(chi))
    return j_val, y_val
