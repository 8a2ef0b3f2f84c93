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
from ..common.errors import ArgumentError, DomainError
from fractions import Fraction


# Apéry's constant to 20 significant digits.
APERY = 1.2020569031595942854

_RIEMANN_ZETA = {
    2: math.pi**2 / 6,
    3: APERY,
    4: math.pi**4 / 90,
}

# Coefficients of B_m(x) in ascending powers of x.
BERNOULLI_POLYNOMIALS: tuple[tuple[Fraction, ...], ...] = (
    (Fraction(1),),
    (Fraction(-1, 2), Fraction(1)),
    (Fraction(1, 6), Fraction(-1), Fraction(1)),
    (Fraction(0), Fraction(1, 2), Fraction(-3, 2), Fraction(1)),
    (Fraction(-1, 30), Fraction(0), Fraction(1), Fraction(-2), Fraction(1)),
    (Fraction(0), Fraction(-1, 6), Fraction(0), Fraction(5, 3), Fraction(-5, 2), Fraction(1)),
    (
        Fraction(1, 42),
        Fraction(0),
        Fraction(-1, 2),
        Fraction(0),
        Fraction(5, 2),
        Fraction(-3),
        Fraction(1),
    ),
    (
        Fraction(0),
        Fraction(1, 6),
        Fraction(0),
        Fraction(-7, 6),
        Fraction(0),
        Fraction(7, 2),
        Fraction(-7, 2),
        Fraction(1),
    ),
)

MAX_HURWITZ_ORDER = len(BERNOULLI_POLYNOMIALS) - 2


def riemann_zeta_small(s: int) -> float:
    """Return ζ(s) for s in {2, 3, 4}."""
    if s not in _RIEMANN_ZETA:
        raise ArgumentError('s', s, 'only ζ(2), ζ(3) and ζ(4) are tabulated')
    return _RIEMANN_ZETA[s]


def bernoulli_polynomial(m: int, q: float | Fraction) -> Fraction:
    """Evaluate B_m(q) exactly for m ≤ 7, treating a float q as the exact binary value."""
    if not 0 <= m < len(BERNOULLI_POLYNOMIALS):
        raise ArgumentError('m', m, f'Bernoulli polynomials are tabulated for 0 ≤ m ≤ {len(BERNOULLI_POLYNOMIALS) - 1}')
    x = Fraction(q)
    value = Fraction(0)
    for coefficient in reversed(BERNOULLI_POLYNOMIALS[m]):
        value = value * x + coefficient
    return value


def hurwitz_zeta_neg(m: int, q: float | Fraction) -> float:
    """Return ζ(−m, q) = −B_{m+1}(q)/(m + 1) for 0 ≤ m ≤ 6 and q in (0, 1]."""
    if m < 0 or m > MAX_HURWITZ_ORDER:
        raise ArgumentError('m', m, f'Hurwitz zeta is tabulated for 0 ≤ m ≤ {MAX_HURWITZ_ORDER}')
    if not 0 < q <= 1:
        raise DomainError('q', q, 'Hurwitz parameter must lie in (0, 1]')
    return float(-bernoulli_polynomial(m + 1, q) / (m + 1))
