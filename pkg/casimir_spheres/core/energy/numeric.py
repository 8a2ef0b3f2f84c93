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
from ..common.errors import ArgumentError
from ..common.helpers import operation_timer
from ..common.models import (
    Correction,
    EnergyBreakdown,
    Geometry,
    Method,
    Mode,
    RegularizedSum,
    Variant,
)
from ..regularization.branch_cut import branch_cut_sum, etilde_numeric
from ..special.zeta import hurwitz_zeta_neg
from .closed_form import (
    area,
    closed_form_full,
    closed_form_half,
    leading_energy,
    plate_limit_per_area,
)
from loguru import logger


def half_sphere_mode_sum_prefactor(ell: int) -> float:
    """Half-sphere weight ½·ℓ = ½(ν − ½) of angular index ℓ ≥ 1; full spheres use ν."""
    if ell < 1:
        raise ArgumentError('ell', ell, 'the half-sphere sum starts at ell=1')
    return Mode.for_variant(ell, 1, Variant.HALF_SPHERE).degeneracy / 2


def hurwitz_boundary_half(geometry: Geometry) -> float:
    """Polynomial part of the half-sphere sum, −(1/(4√(ab)))·[ζ(−2,½) − ½ζ(−1,½)]."""
    bracket = hurwitz_zeta_neg(2, 0.5) - 0.5 * hurwitz_zeta_neg(1, 0.5)
    return -bracket / (4 * geometry.sqrt_ab)


def _numeric_breakdown(
    geometry: Geometry,
    variant: Variant,
    regularized: RegularizedSum,
    corrections: list[Correction],
) -> EnergyBreakdown:
    # the log-derivative is even in y, so the high-ℓ part has no real contribution
    e_bar = 0.0
    e_tilde = regularized.value
    e_total = e_bar + e_tilde
    leading = leading_energy(geometry, variant)
    surface = area(geometry, variant)
    per_area = e_total / surface
    return EnergyBreakdown(
        geometry=geometry,
        variant=variant,
        method=Method.NUMERIC,
        e_bar=e_bar,
        e_tilde=e_tilde,
        e_total=e_total,
        leading=leading,
        corrections=corrections,
        bracket=e_total / leading,
        per_area=per_area,
        per_area_printed=per_area * math.pi if variant is Variant.HALF_SPHERE else per_area,
        area=surface,
        geometry_factor=geometry.b / geometry.a,
        plate_limit=plate_limit_per_area(geometry.d),
        truncation_error_estimate=regularized.truncation_error_estimate,
    )


def numeric_full(geometry: Geometry, quad_tol: float) -> EnergyBreakdown:
    """Full-sphere energy from the exponentially convergent sum −2·Σ_ℓ F(ν)."""
    return _numeric_breakdown(geometry, Variant.FULL_SPHERE, etilde_numeric(geometry, quad_tol), [])


def numeric_half(geometry: Geometry, quad_tol: float) -> EnergyBreakdown:
    """Half-sphere energy −2·Σ_{ℓ≥1} ½ℓ·F(ν)/ν plus its Hurwitz-regularized polynomial part."""
    boundary = hurwitz_boundary_half(geometry)
    with operation_timer('numeric_half', a=geometry.a, b=geometry.b, quad_tol=quad_tol):
        regularized = branch_cut_sum(
            geometry,
            half_sphere_mode_sum_prefactor,
            quad_tol,
            ell_start=1,
            boundary_term=boundary,
        )
    leading = leading_energy(geometry, Variant.HALF_SPHERE)
    corrections = [
        Correction(name='hurwitz_boundary', bracket_term=boundary / leading, energy=boundary)
    ]
    breakdown = _numeric_breakdown(geometry, Variant.HALF_SPHERE, regularized, corrections)
    if not breakdown.attractive:
        logger.warning(
            'Half-sphere energy {} is not negative at eta={}: boundary term {} exceeds the cut sum',
            breakdown.e_total,
            geometry.eta,
            boundary,
        )
    return breakdown


def energy_breakdown(
    geometry: Geometry, variant: Variant, method: Method, quad_tol: float
) -> EnergyBreakdown:
    """Dispatch to the closed-form or numeric pipeline of a cavity."""
    if method is Method.CLOSED_FORM:
        if variant is Variant.FULL_SPHERE:
            return closed_form_full(geometry)
        return closed_form_half(geometry)
    if variant is Variant.FULL_SPHERE:
        return numeric_full(geometry, quad_tol)
    return numeric_half(geometry, quad_tol)


def compare_methods(geometry: Geometry, variant: Variant, quad_tol: float) -> list[EnergyBreakdown]:
    """Closed-form and numeric energies, the latter carrying its relative difference."""
    closed = energy_breakdown(geometry, variant, Method.CLOSED_FORM, quad_tol)
    numeric = energy_breakdown(geometry, variant, Method.NUMERIC, quad_tol)
    difference = (numeric.e_total - closed.e_total) / abs(closed.e_total)
    return [closed, numeric.model_copy(update={'reference_difference': difference})]
