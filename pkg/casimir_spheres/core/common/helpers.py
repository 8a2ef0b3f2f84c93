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

import json
import math
import numpy as np
import pandas as pd
import time
import warnings
from .config import MAX_QUAD_TOL, MIN_QUAD_TOL, PACKAGE_VERSION
from .errors import ArgumentError, QuadratureError
from collections.abc import Callable, Sequence
from contextlib import contextmanager
from enum import Enum
from loguru import logger
from pathlib import Path
from pydantic import BaseModel
from scipy import integrate
from typing import Any


# QUADPACK refuses relative tolerances below 50 machine epsilons.
_MIN_EPSREL = 50 * np.finfo(float).eps


@contextmanager
def operation_timer(pipeline: str, **params: Any):
    """Context manager for timing a numerical pipeline.

    :param pipeline: The pipeline name.
    :param params: Parameters logged alongside the pipeline name.
    """
    start = time.perf_counter()
    logger.info('Running {} with {}', pipeline, params)
    yield
    end = time.perf_counter()
    elapsed_time = end - start
    logger.info('{} finished in {} seconds', pipeline, elapsed_time)


class ReportEncoder(json.JSONEncoder):
    """Custom JSON encoder for numerical reports."""

    def default(self, o):
        """Return a JSON-serializable version of the object."""
        if isinstance(o, BaseModel):
            return o.model_dump(by_alias=True)
        if isinstance(o, complex | np.complexfloating):
            return {'real': float(o.real), 'imag': float(o.imag)}
        if isinstance(o, np.integer):
            return int(o)
        if isinstance(o, np.floating):
            return float(o)
        if isinstance(o, np.bool_):
            return bool(o)
        if isinstance(o, np.ndarray):
            return o.tolist()
        if isinstance(o, Enum):
            return o.value
        if isinstance(o, Path):
            return str(o)
        return super().default(o)


def as_json(payload: Any, indent: int | None = None) -> str:
    """Convert a report payload to a JSON string."""
    return json.dumps(payload, cls=ReportEncoder, indent=indent)


def to_plain(payload: Any) -> Any:
    """Convert a payload of models, numpy values and enums to plain JSON types."""
    return json.loads(as_json(payload))


def write_table(
    rows: Sequence[Any],
    fmt: str,
    path: str | Path | None = None,
    config: dict[str, Any] | None = None,
) -> str:
    """Render report rows as JSON or CSV, writing them to path when given.

    JSON output is ``{"meta": {"version", "config"}, "data": [...]}``. CSV output has one
    column per JSON field, nested fields joined with dots, at 17 significant digits.
    """
    data = to_plain(list(rows))
    if fmt == 'json':
        text = as_json({'meta': {'version': PACKAGE_VERSION, 'config': config or {}}, 'data': data}, indent=2)
        text += '\n'
    elif fmt == 'csv':
        frame = pd.json_normalize(data, sep='.')
        text = frame.to_csv(index=False, float_format='%.17g', lineterminator='\n')
    else:
        raise ValueError(f'Unsupported output format: {fmt}')

    if path is not None:
        Path(path).write_text(text)
        logger.info('Wrote {} rows to {}', len(data), path)
    return text


def _quad_once(
    func: Callable[..., float],
    lower: float,
    upper: float,
    epsrel: float,
    epsabs: float,
    limit: int,
    **kwargs: Any,
) -> tuple[float, float, bool]:
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', integrate.IntegrationWarning)
        result = integrate.quad(
            func, lower, upper, epsabs=epsabs, epsrel=epsrel, limit=limit, full_output=1, **kwargs
        )
    # quad appends a message only when QUADPACK reports a problem
    converged = len(result) == 3
    return float(result[0]), float(result[1]), converged


def adaptive_quad(
    func: Callable[..., float],
    lower: float,
    upper: float,
    tol: float,
    label: str,
    limit: int = 200,
    epsabs: float = 0.0,
    **kwargs: Any,
) -> tuple[float, float]:
    """Integrate func over [lower, upper] to relative tolerance tol.

    A run that QUADPACK flags as unconverged is repeated once with four times the
    subdivision limit. If the retry is also flagged, the two estimates must agree to within
    ten times the tolerance, otherwise QuadratureError is raised with both of them.

    Returns the integral and its absolute error estimate.
    """
    epsrel = max(tol, _MIN_EPSREL)
    value, error, converged = _quad_once(func, lower, upper, epsrel, epsabs, limit, **kwargs)
    if converged:
        return value, error

    logger.warning('Quadrature for {} flagged at limit {}; retrying with {}', label, limit, 4 * limit)
    retry, retry_error, converged = _quad_once(
        func, lower, upper, epsrel, epsabs, 4 * limit, **kwargs
    )
    if converged:
        return retry, retry_error

    scale = max(abs(retry), epsabs, math.ulp(1.0))
    if abs(retry - value) <= 10 * epsrel * scale:
        logger.warning('Quadrature for {} accepted on agreement of two estimates', label)
        return retry, max(retry_error, abs(retry - value))

    logger.error('Quadrature for {} failed: {} vs {}', label, value, retry)
    raise QuadratureError(label, [value, retry], [error, retry_error])


def check_quad_tol(quad_tol: float) -> float:
    """Reject quadrature tolerances outside the supported range."""
    if not MIN_QUAD_TOL <= quad_tol <= MAX_QUAD_TOL:
        raise ArgumentError('quad_tol', quad_tol, f'tolerance must lie in [{MIN_QUAD_TOL:g}, {MAX_QUAD_TOL:g}]')
    return quad_tol
