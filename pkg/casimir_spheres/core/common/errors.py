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

import dataclasses
from typing import Any


@dataclasses.dataclass(frozen=True)
class Failure:
    """Represents a failure with a reason and optional context."""

    reason: str
    context: dict[str, Any] | None = None


class CasimirError(Exception):
    """Base class for all errors thrown by this library."""

    def as_failure(self) -> Failure:
        """Return a Failure object representing this error."""
        return Failure(reason=str(self))


class DomainError(CasimirError):
    """Thrown when an argument lies outside the mathematical domain of an operation."""

    _message = 'Argument {name}={value!r} is outside the domain: {requirement}'

    def __init__(self, name: str, value: Any, requirement: str):
        """Initialize DomainError with the offending argument and the violated requirement."""
        message = self._message.format(name=name, value=value, requirement=requirement)
        self._name = name
        self._value = value
        self._requirement = requirement
        super().__init__(message)

    def as_failure(self) -> Failure:
        """Return a Failure object representing this error."""
        return Failure(
            reason=str(self),
            context={'argument': self._name, 'value': self._value, 'requirement': self._requirement},
        )


class ArgumentError(CasimirError):
    """Thrown when an argument is valid mathematically but outside the supported range."""

    _message = 'Unsupported {name}={value!r}: {supported}'

    def __init__(self, name: str, value: Any, supported: str):
        """Initialize ArgumentError with the argument and the supported range."""
        message = self._message.format(name=name, value=value, supported=supported)
        self._name = name
        self._value = value
        self._supported = supported
        super().__init__(message)

    def as_failure(self) -> Failure:
        """Return a Failure object representing this error."""
        return Failure(
            reason=str(self),
            context={'argument': self._name, 'value': self._value, 'supported': self._supported},
        )


class NumericalError(CasimirError):
    """Base class for failures of a numerical procedure on valid input."""


class BesselRangeError(NumericalError):
    """Thrown when an unscaled Bessel value overflows or underflows double precision."""

    _message = '{function} of order ell={ell} at x={x!r} is not representable ({detail})'

    def __init__(self, function: str, ell: float, x: float, detail: str):
        """Initialize BesselRangeError with the function name, order and argument."""
        message = self._message.format(function=function, ell=ell, x=x, detail=detail)
        self._function = function
        self._ell = ell
        self._x = x
        super().__init__(message)

    def as_failure(self) -> Failure:
        """Return a Failure object representing this error."""
        return Failure(
            reason=str(self),
            context={'function': self._function, 'ell': self._ell, 'x': self._x},
        )


class QuadratureError(NumericalError):
    """Thrown when adaptive quadrature does not reach its tolerance after refinement."""

    _message = 'Quadrature for {label} did not converge: last estimates {estimates}'

    def __init__(self, label: str, estimates: list[float], errors: list[float]):
        """Initialize QuadratureError with the last two refinement estimates."""
        message = self._message.format(label=label, estimates=estimates)
        self._label = label
        self._estimates = estimates
        self._errors = errors
        super().__init__(message)

    def as_failure(self) -> Failure:
        """Return a Failure object representing this error."""
        return Failure(
            reason=str(self),
            context={
                'integral': self._label,
                'estimates': self._estimates,
                'error_estimates': self._errors,
            },
        )


class BracketError(NumericalError):
    """Thrown when the root scan keeps missing brackets after repeated step halving."""

    _message = 'Root scan for ell={ell} failed on [{lower!r}, {upper!r}]: {detail}'

    def __init__(self, ell: int, lower: float, upper: float, detail: str):
        """Initialize BracketError naming the angular index and the scan interval."""
        message = self._message.format(ell=ell, lower=lower, upper=upper, detail=detail)
        self._ell = ell
        self._interval = [lower, upper]
        super().__init__(message)

    def as_failure(self) -> Failure:
        """Return a Failure object representing this error."""
        return Failure(reason=str(self), context={'ell': self._ell, 'interval': self._interval})


class ParityFitError(NumericalError):
    """Thrown when the polynomial parity fit has an ill-conditioned design matrix."""

    _message = (
        'Parity fit is ill-conditioned (condition number {condition:.3g}); '
        'spread the y grid over a wider range'
    )

    def __init__(self, condition: float, y_min: float, y_max: float):
        """Initialize ParityFitError with the condition number and grid span."""
        message = self._message.format(condition=condition)
        self._condition = condition
        self._span = [y_min, y_max]
        super().__init__(message)

    def as_failure(self) -> Failure:
        """Return a Failure object representing this error."""
        return Failure(
            reason=str(self), context={'condition_number': self._condition, 'y_span': self._span}
        )


class TermGrowthError(NumericalError):
    """Thrown when an exponentially decaying series stops decreasing."""

    _message = 'Term for ell={ell} ({term!r}) is not below the previous term ({previous!r})'

    def __init__(self, ell: int, term: float, previous: float):
        """Initialize TermGrowthError with the offending terms."""
        message = self._message.format(ell=ell, term=term, previous=previous)
        self._ell = ell
        self._terms = [previous, term]
        super().__init__(message)

    def as_failure(self) -> Failure:
        """Return a Failure object representing this error."""
        return Failure(reason=str(self), context={'ell': self._ell, 'terms': self._terms})


class StepTooSmallError(NumericalError):
    """Thrown when a finite difference is swamped by evaluation noise."""

    _message = 'Energy difference {difference!r} is below the noise level {noise!r}; increase rel_step'

    def __init__(self, difference: float, noise: float, rel_step: float):
        """Initialize StepTooSmallError with the difference and the noise estimate."""
        message = self._message.format(difference=difference, noise=noise)
        self._difference = difference
        self._noise = noise
        self._rel_step = rel_step
        super().__init__(message)

    def as_failure(self) -> Failure:
        """Return a Failure object representing this error."""
        return Failure(
            reason=str(self),
            context={
                'difference': self._difference,
                'noise': self._noise,
                'rel_step': self._rel_step,
            },
        )


class IdentityMismatchError(NumericalError):
    """Thrown when two algebraically equal forms of a closed-form result disagree."""

    _message = '{name}: forms differ by relative {deviation!r}'

    def __init__(self, name: str, deviation: float):
        """Initialize IdentityMismatchError with the relative deviation."""
        message = self._message.format(name=name, deviation=deviation)
        self._name = name
        self._deviation = deviation
        super().__init__(message)

    def as_failure(self) -> Failure:
        """Return a Failure object representing this error."""
        return Failure(
            reason=str(self), context={'identity': self._name, 'deviation': self._deviation}
        )
