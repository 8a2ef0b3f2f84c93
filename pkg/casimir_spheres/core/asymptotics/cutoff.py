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

import cmath
import math
from ..common.config import DEFAULT_QUAD_TOL
from ..common.errors import DomainError
from ..common.helpers import adaptive_quad
from scipy import optimize


# Envelope level, relative to its peak, at which the rotated-ray integral is cut off.
ENVELOPE_CUTOFF = 1e-18


def _check_arguments(n: int, b: float, alpha: float, phi: float) -> None:
    if n < 0:
        raise DomainError('n', n, 'power index must be non-negative')
    if not b > 0:
        raise DomainError('b', b, 'outer radius must be positive')
    if not alpha > 0:
        raise DomainError('alpha', alpha, 'cutoff must be positive for the integral to converge')
    if not 0 < phi < math.pi / 2:
        raise DomainError('phi', phi, 'rotation angle must lie in (0, π/2)')


def cutoff_integral(n: int, nu: float, b: float, alpha: float, phi: float) -> complex:
    """Closed form i·(−1)^{n+1}·(2n)!·ν^{2n}·(b/α)^{2n+1} of the cutoff integral.

    The value is purely imaginary for every n and does not depend on φ.
    """
    _check_arguments(n, b, alpha, phi)
    magnitude = math.factorial(2 * n) * nu ** (2 * n) * (b / alpha) ** (2 * n + 1)
    return complex(0.0, (-1) ** (n + 1) * magnitude)


def _truncation_point(n: int, decay: float) -> float:
    """Point beyond the envelope peak where y^{2n}e^{−κy} drops to ENVELOPE_CUTOFF of it."""
    drop = -math.log(ENVELOPE_CUTOFF)
    if n == 0:
        return drop / decay
    peak = 2 * n / decay

    def log_ratio(y: float) -> float:
        return 2 * n * math.log(y / peak) - decay * (y - peak) + drop

    upper = peak + drop / decay
    while log_ratio(upper) > 0:
        upper = peak + 2 * (upper - peak)
    return optimize.brentq(log_ratio, peak, upper)


def cutoff_integral_quadrature(
    n: int, nu: float, b: float, alpha: float, phi: float, tol: float = DEFAULT_QUAD_TOL
) -> complex:
    """Evaluate e^{−iφ}∫₀^∞ y^{2n}·e^{−iαye^{−iφ}/b}·(νe^{−iφ})^{2n} dy by quadrature.

    On the rotated ray the exponent splits into a damping e^{−κy}, κ = α·sinφ/b, and an
    oscillation e^{−iωy}, ω = α·cosφ/b, so the real and imaginary parts are
    Fourier-weighted integrals of the envelope y^{2n}e^{−κy}.
    """
    _check_arguments(n, b, alpha, phi)
    decay = alpha * math.sin(phi) / b
    frequency = alpha * math.cos(phi) / b
    upper = _truncation_point(n, decay)
    # absolute floor from the Laplace integral of the envelope, (2n)!/κ^{2n+1}
    floor = 1e-3 * tol * math.factorial(2 * n) / decay ** (2 * n + 1)

    def envelope(y: float) -> float:
        return y ** (2 * n) * math.exp(-decay * y)

    cosine, _ = adaptive_quad(
        envelope, 0.0, upper, tol, f'cutoff cos n={n}', epsabs=floor, weight='cos', wvar=frequency
    )
    sine, _ = adaptive_quad(
        envelope, 0.0, upper, tol, f'cutoff sin n={n}', epsabs=floor, weight='sin', wvar=frequency
    )
    phase = cmath.exp(-1j * phi) * (nu * cmath.exp(-1j * phi)) ** (2 * n)
    return phase * complex(cosine, -sine)
