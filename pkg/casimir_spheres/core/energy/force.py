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
from ..common.errors import ArgumentError, StepTooSmallError
from ..common.models import Geometry, Method, Variant
from .numeric import energy_breakdown
from loguru import logger


MIN_REL_STEP = 1e-6
MAX_REL_STEP = 1e-2


def geometry_at_gap(mean_radius: float, d: float) -> Geometry:
    """Geometry with √(ab) = mean_radius and b − a = d."""
    a = -d / 2 + math.sqrt(d**2 / 4 + mean_radius**2)
    return Geometry(a=a, b=a + d)


def force(
    geometry: Geometry,
    method: Method,
    rel_step: float,
    variant: Variant = Variant.FULL_SPHERE,
    quad_tol: float = 1e-10,
) -> float:
    """Generalized force −∂E/∂d at fixed √(ab), by central difference with step rel_step·d.

    A negative result means attraction: the energy rises with the gap, so the gap is
    pulled shut.

    Raises:
        StepTooSmallError: if the energy change is lost in evaluation noise.
    """
    if not MIN_REL_STEP <= rel_step <= MAX_REL_STEP:
        raise ArgumentError('rel_step', rel_step, f'step must lie in [{MIN_REL_STEP:g}, {MAX_REL_STEP:g}]')
    step = rel_step * geometry.d
    wider = geometry_at_gap(geometry.sqrt_ab, geometry.d + step)
    narrower = geometry_at_gap(geometry.sqrt_ab, geometry.d - step)
    energy_wide = energy_breakdown(wider, variant, method, quad_tol).e_total
    energy_narrow = energy_breakdown(narrower, variant, method, quad_tol).e_total

    difference = energy_wide - energy_narrow
    eps = np.finfo(float).eps
    relative_noise = 10 * max(eps, quad_tol) if method is Method.NUMERIC else 1e3 * eps
    noise = relative_noise * max(abs(energy_wide), abs(energy_narrow))
    if abs(difference) < noise:
        logger.error('Force step {} too small: difference {} below noise {}', step, difference, noise)
        raise StepTooSmallError(difference, noise, rel_step)
    return -difference / (2 * step)
