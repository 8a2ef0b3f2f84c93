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
from casimir_spheres.core.common.models import Geometry


# Unit inner radius with a 10% gap; the closed-form full-sphere energy is about −94.85.
THIN_SHELL = Geometry(a=1.0, b=1.1)
THIN_SHELL_CLOSED_FORM_ENERGY = -(math.pi**3 / 360) * 1100 * (1 + 5 / (4 * math.pi**2) / 110)

# ℓ = 0 roots are the sine zeros nπ/d exactly.
WIDE_SHELL = Geometry(a=1.0, b=2.0)

# Geometries for which the asymptotic spectrum is accurate to a few percent.
NARROW_GEOMETRIES = [
    Geometry(a=1.0, b=1.01),
    Geometry(a=1.0, b=1.05),
    Geometry(a=1.0, b=1.1),
]


class DummyCtx:
    """Mock implementation of MCP context for testing purposes."""

    def __init__(self):
        """Start with no recorded errors."""
        self.errors: list[str] = []

    async def error(self, message):
        """Mock MCP ctx.error with the given message.

        Args:
            message: The error message
        """
        # MCP ctx.error doesn't throw, it only reports
        self.errors.append(message)
