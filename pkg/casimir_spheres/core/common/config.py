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

import importlib.metadata
import os
from typing import Literal, cast


try:
    PACKAGE_VERSION = importlib.metadata.version('casimir-spheres')
except importlib.metadata.PackageNotFoundError:
    PACKAGE_VERSION = 'unknown'

TRUTHY_VALUES = frozenset(['true', 'yes', '1'])
QUAD_TOL_KEY = 'CASIMIR_QUAD_TOL'
LOG_LEVEL_KEY = 'CASIMIR_LOG_LEVEL'
LOG_FILE_KEY = 'CASIMIR_LOG_FILE'
TRANSPORT_KEY = 'CASIMIR_MCP_TRANSPORT'

DEFAULT_QUAD_TOL = 1e-10
MIN_QUAD_TOL = 1e-12
MAX_QUAD_TOL = 1e-2

# Caps on tabulated spectra; beyond them callers use the asymptotic spectrum.
MAX_ELL = 200
MAX_ROOTS = 10_000


def get_env_bool(env_key: str, default: bool) -> bool:
    """Get a boolean value from an environment variable, with a default."""
    return os.getenv(env_key, str(default)).casefold() in TRUTHY_VALUES


def validate_quad_tol(value: float) -> float:
    """Check that a quadrature tolerance lies in the supported range."""
    if not MIN_QUAD_TOL <= value <= MAX_QUAD_TOL:
        raise ValueError(
            f'Quadrature tolerance {value!r} outside [{MIN_QUAD_TOL:g}, {MAX_QUAD_TOL:g}]'
        )
    return value


def get_quad_tol_from_env() -> float:
    """Get the default quadrature tolerance, honouring the CASIMIR_QUAD_TOL override."""
    raw = os.getenv(QUAD_TOL_KEY)
    if raw is None or not raw.strip():
        return DEFAULT_QUAD_TOL

    try:
        value = float(raw)
    except ValueError:
        raise ValueError(f'Invalid {QUAD_TOL_KEY}: {raw!r} is not a number')

    return validate_quad_tol(value)


def get_transport_from_env() -> Literal['stdio', 'streamable-http']:
    """Get a transport value from an environment variable, with a default."""
    transport = os.getenv(TRANSPORT_KEY, 'stdio')
    if transport not in ['stdio', 'streamable-http']:
        raise ValueError(f'Invalid transport: {transport}')

    return cast(Literal['stdio', 'streamable-http'], transport)


LOG_LEVEL = os.getenv(LOG_LEVEL_KEY, 'WARNING')
LOG_FILE = os.getenv(LOG_FILE_KEY)
TRANSPORT = get_transport_from_env()
HOST = os.getenv('CASIMIR_MCP_HOST', '127.0.0.1')
PORT = int(os.getenv('CASIMIR_MCP_PORT', 8000))
STATELESS_HTTP = get_env_bool('CASIMIR_MCP_STATELESS_HTTP', False)
