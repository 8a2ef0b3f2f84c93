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
from ..common.errors import DomainError, IdentityMismatchError
from ..common.models import (
    Correction,
    EnergyBreakdown,
    Geometry,
    LimitScanRow,
    Method,
    Variant,
)
from ..special.zeta import riemann_zeta_small
from collections.abc import Sequence
from loguru import logger


IDENTITY_TOLERANCE = 1e-14


def plate_limit_per_area(d: float) -> float:
    """Parallel-plate Dirichlet energy per unit area, −ζ(4)/(16π²d³) = −π²/(1440d³)."""
    if not d > 0:
        raise DomainError('d', d, 'plate separation must be positive')
    return -riemann_zeta_small(4) / (16 * math.pi**2 * d**3)


def area(geometry: Geometry, variant: Variant) -> float:
    """Inner surface area, 4πa² for full spheres and 2πa² for half spheres."""
    factor = 4 if variant is Variant.FULL_SPHERE else 2
    return factor * math.pi * geometry.a**2


def leading_energy(geometry: Geometry, variant: Variant) -> float:
    """The ζ(4) term, −ζ(4)·ab/(4πd³) for full spheres and half that for half spheres."""
    denominator = 4 if variant is Variant.FULL_SPHERE else 8
    return -riemann_zeta_small(4) * geometry.a * geometry.b / (denominator * math.pi * geometry.d**3)


def _breakdown(
    geometry: Geometry, variant: Variant, corrections: list[Correction], leading: float
) -> EnergyBreakdown:
    bracket = 1 + math.fsum(c.bracket_term for c in corrections)
    e_tilde = leading * bracket
    e_bar = 0.0
    e_total = e_bar + e_tilde
    surface = area(geometry, variant)
    per_area = e_total / surface
    # the printed half-sphere per-area prefactor is 1/(16π) where the division gives 1/(16π²)
    printed = per_area * math.pi if variant is Variant.HALF_SPHERE else per_area
    return EnergyBreakdown(
        geometry=geometry,
        variant=variant,
        method=Method.CLOSED_FORM,
        e_bar=e_bar,
        e_tilde=e_tilde,
        e_total=e_total,
        leading=leading,
        corrections=corrections,
        bracket=bracket,
        per_area=per_area,
        per_area_printed=printed,
        area=surface,
        geometry_factor=geometry.b / geometry.a,
        plate_limit=plate_limit_per_area(geometry.d),
    )


def closed_form_full(geometry: Geometry) -> EnergyBreakdown:
    """Full-sphere energy −(ab/d³)(ζ(4)/4π)·[1 + (η²/12)·ζ(2)/ζ(4)].

    The explicit-π form −(π³/360)(ab/d³)·[1 + (5/4π²)(d²/ab)] is evaluated as well and the
    two must agree to 1e−14.

    Raises:
        IdentityMismatchError: if the two forms disagree.
    """
    zeta2, zeta4 = riemann_zeta_small(2), riemann_zeta_small(4)
    ab = geometry.a * geometry.b
    d = geometry.d
    leading = leading_energy(geometry, Variant.FULL_SPHERE)
    term = geometry.eta**2 / 12 * zeta2 / zeta4
    zeta_form = leading * (1 + term)
    pi_form = -(math.pi**3 / 360) * (ab / d**3) * (1 + 5 / (4 * math.pi**2) * (d**2 / ab))
    deviation = abs(zeta_form - pi_form) / abs(pi_form)
    if deviation > IDENTITY_TOLERANCE:
        logger.error('Full-sphere closed forms disagree by {}', deviation)
        raise IdentityMismatchError('full-sphere zeta and explicit-π forms', deviation)

    corrections = [Correction(name='eta_squared', bracket_term=term, energy=leading * term)]
    return _breakdown(geometry, Variant.FULL_SPHERE, corrections, leading)


def half_sphere_corrections(geometry: Geometry, leading: float) -> list[Correction]:
    """The four η-dependent bracket terms of the half-sphere energy."""
    zeta2, zeta3, zeta4 = (riemann_zeta_small(s) for s in (2, 3, 4))
    eta = geometry.eta
    terms = {
        'eta_linear': -(math.pi / 4) * eta * zeta3 / zeta4,
        'eta_cubed_zeta4': (math.pi / 24) * eta**3 / zeta4,
        'eta_squared': eta**2 / 12 * zeta2 / zeta4,
        'eta_cubed_inverse_pi': -(1 / (4 * math.pi)) * eta**3 / zeta4,
    }
    return [
        Correction(name=name, bracket_term=value, energy=leading * value)
        for name, value in terms.items()
    ]


def closed_form_half(geometry: Geometry) -> EnergyBreakdown:
    """Half-sphere energy with each bracket term stored separately.

        E = −(ab/d³)(ζ(4)/8π)·[1 − (π/4)ηζ(3)/ζ(4) + (π/24)η³/ζ(4)
                                + (η²/12)ζ(2)/ζ(4) − (1/4π)η³/ζ(4)]
    """
    leading = leading_energy(geometry, Variant.HALF_SPHERE)
    return _breakdown(
        geometry, Variant.HALF_SPHERE, half_sphere_corrections(geometry, leading), leading
    )


def geometry_from_eta(a: float, eta: float) -> Geometry:
    """Geometry with inner radius a and d/√(ab) = η."""
    if not eta > 0:
        raise DomainError('eta', eta, 'gap ratio must be positive')
    return Geometry(a=a, b=a * (1 + eta**2 / 2 + eta * math.sqrt(1 + eta**2 / 4)))


def limit_scan(a: float, eta_list: Sequence[float], variant: Variant) -> list[LimitScanRow]:
    """Closed-form per-area energies against the plate limit for shrinking gaps."""
    rows = []
    for eta in eta_list:
        geometry = geometry_from_eta(a, eta)
        breakdown = (
            closed_form_full(geometry)
            if variant is Variant.FULL_SPHERE
            else closed_form_half(geometry)
        )
        ratio = breakdown.per_area / breakdown.plate_limit
        rows.append(
            LimitScanRow(
                eta=eta,
                b=geometry.b,
                d=geometry.d,
                per_area=breakdown.per_area,
                plate_limit=breakdown.plate_limit,
                ratio=ratio,
                bracket_ratio=ratio / breakdown.geometry_factor,
            )
        )
    return rows
