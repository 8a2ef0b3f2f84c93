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
from enum import Enum
from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator
from typing import Any


class Variant(str, Enum):
    """Which cavity the energy is computed for."""

    FULL_SPHERE = 'full_sphere'
    HALF_SPHERE = 'half_sphere'


class Method(str, Enum):
    """How an energy is obtained."""

    CLOSED_FORM = 'closed_form'
    NUMERIC = 'numeric'


class SummationVariant(str, Enum):
    """Abel-Plana kernel: integer spectrum (e^{2πt}−1) or half-integer spectrum (e^{2πt}+1)."""

    INTEGER = 'integer'
    HALF_INTEGER = 'half'


class CalibrationCase(str, Enum):
    """Polynomial summands with known regularized sums."""

    CONST = 'const'
    LINEAR = 'linear'
    CUBIC = 'cubic'


class OutputFormat(str, Enum):
    """Report serialization format."""

    JSON = 'json'
    CSV = 'csv'


class MethodChoice(str, Enum):
    """Energy methods selectable from the command line."""

    CLOSED_FORM = 'closed-form'
    NUMERIC = 'numeric'
    BOTH = 'both'

    def to_method(self) -> Method:
        """Return the single method selected; BOTH has none."""
        if self is MethodChoice.BOTH:
            raise ValueError('both selects two methods')
        return Method.CLOSED_FORM if self is MethodChoice.CLOSED_FORM else Method.NUMERIC


class Subcommand(str, Enum):
    """Command-line pipelines."""

    ROOTS = 'roots'
    SPECTRUM_CHECK = 'spectrum-check'
    ENERGY = 'energy'
    LIMIT_SCAN = 'limit-scan'
    ABEL_PLANA = 'abel-plana'
    VERIFY_EBAR = 'verify-ebar'


class Geometry(BaseModel):
    """Two concentric spheres of radii a < b, lengths in arbitrary units."""

    model_config = ConfigDict(frozen=True)

    a: float = Field(gt=0, allow_inf_nan=False, description='Inner radius')
    b: float = Field(gt=0, allow_inf_nan=False, description='Outer radius')

    @model_validator(mode='after')
    def _check_ordering(self) -> 'Geometry':
        if not self.b > self.a:
            raise ValueError(f'Outer radius b={self.b!r} must exceed inner radius a={self.a!r}')
        return self

    @computed_field
    @property
    def d(self) -> float:
        """Gap width b − a."""
        return self.b - self.a

    @computed_field(alias='lambda')
    @property
    def lambda_(self) -> float:
        """Radius ratio a/b, always in (0, 1)."""
        return self.a / self.b

    @computed_field
    @property
    def eta(self) -> float:
        """Gap over the geometric mean radius, d/√(ab)."""
        return self.d / self.sqrt_ab

    @computed_field
    @property
    def xi(self) -> float:
        """Branch-point scale 2d/√(ab)."""
        return 2 * self.eta

    @property
    def sqrt_ab(self) -> float:
        """Geometric mean radius √(ab)."""
        return math.sqrt(self.a * self.b)

    def scaled(self, k: float) -> 'Geometry':
        """Return the geometry with both radii multiplied by k."""
        return Geometry(a=k * self.a, b=k * self.b)


class Mode(BaseModel):
    """A single eigenmode label."""

    model_config = ConfigDict(frozen=True)

    ell: int = Field(ge=0)
    n: int = Field(ge=1)
    degeneracy: float = Field(gt=0)

    @computed_field
    @property
    def nu(self) -> float:
        """Bessel order ℓ + 1/2."""
        return self.ell + 0.5

    @classmethod
    def for_variant(cls, ell: int, n: int, variant: Variant) -> 'Mode':
        """Build a mode with the degeneracy counting rule of the given cavity.

        Full spheres count 2ℓ + 1 = 2ν azimuthal states; half spheres with a Dirichlet
        equatorial plane keep ℓ of them.
        """
        degeneracy = 2 * ell + 1 if variant is Variant.FULL_SPHERE else ell
        return cls(ell=ell, n=n, degeneracy=degeneracy)


class OrdinaryBesselPair(BaseModel):
    """J_ν(x) and N_ν(x) at half-integer order ν = ℓ + 1/2."""

    model_config = ConfigDict(frozen=True)

    order_ell: int = Field(ge=0)
    argument: float = Field(gt=0)
    j_val: float
    y_val: float


class ScaledBesselPair(BaseModel):
    """e^{−x}·I_ν(x) and e^{x}·K_ν(x) at half-integer order ν = ℓ + 1/2."""

    model_config = ConfigDict(frozen=True)

    order_ell: int = Field(ge=0)
    argument: float = Field(gt=0)
    i_scaled: float = Field(gt=0)
    k_scaled: float = Field(gt=0)


class RootTable(BaseModel):
    """Eigenfrequencies of one angular index together with their asymptotic predictions."""

    model_config = ConfigDict(frozen=True)

    geometry: Geometry
    ell: int = Field(ge=0)
    roots: list[float]
    asymptotic: list[float]
    scan_step: float | None = Field(default=None, description='Bracketing step that succeeded')

    @model_validator(mode='after')
    def _check_roots(self) -> 'RootTable':
        if len(self.roots) != len(self.asymptotic):
            raise ValueError('roots and asymptotic must have the same length')
        if any(later <= earlier for earlier, later in zip(self.roots, self.roots[1:])):
            raise ValueError('roots must be strictly increasing')
        return self

    @computed_field
    @property
    def relative_deviation(self) -> list[float]:
        """|ω − ω̃|/ω per radial index."""
        return [abs(w - wt) / w for w, wt in zip(self.roots, self.asymptotic)]

    def rows(self) -> list[dict[str, Any]]:
        """Return one row per radial index for tabular output."""
        return [
            {
                'n': n,
                'omega_numeric': omega,
                'omega_asymptotic': tilde,
                'rel_dev': deviation,
            }
            for n, (omega, tilde, deviation) in enumerate(
                zip(self.roots, self.asymptotic, self.relative_deviation), start=1
            )
        ]


class CrossProduct(BaseModel):
    """I_ν(z)K_ν(λz) − I_ν(λz)K_ν(z) at z = νy, with its logarithmic derivative."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    nu: float
    y: float = Field(gt=0)
    lambda_: float = Field(alias='lambda', gt=0, lt=1)
    value: float
    log_deriv: float = Field(description='z·d/dz ln f at z = νy')
    log_deriv_noise: float = Field(ge=0, description='Rounding bound on log_deriv')


class LommelTerm(BaseModel):
    """One order of the (1 − λ²)-series of the log-derivative."""

    model_config = ConfigDict(frozen=True)

    order: int = Field(ge=2, le=6)
    epsilon_power: float = Field(description='(1 − λ²)^k')
    value: float


class LommelSeries(BaseModel):
    """The (1 − λ²)-series of z·d/dz ln f evaluated at one point."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    lambda_: float = Field(alias='lambda', gt=0, lt=1)
    nu: float
    y: float = Field(gt=0)
    coefficients: list[LommelTerm]
    max_order: int = Field(ge=2, le=6)

    @computed_field
    @property
    def total(self) -> float:
        """Sum of the terms up to max_order."""
        return math.fsum(term.value for term in self.coefficients if term.order <= self.max_order)


class LommelResiduals(BaseModel):
    """Truncation residuals of the series against the direct log-derivative."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    lambda_: float = Field(alias='lambda')
    nu: float
    y: float
    direct: float
    residuals: list[float] = Field(description='|series(k) − direct| for k = 2..6')
    monotone: bool
    non_monotone_orders: list[int] = Field(default_factory=list)


class RegularizedSum(BaseModel):
    """A regularized sum split into its boundary and cut-integral parts."""

    model_config = ConfigDict(frozen=True)

    value: float
    boundary_term: float
    cut_integral: float
    truncation_error_estimate: float = Field(ge=0)
    pieces: list[float] = Field(default_factory=list)

    @model_validator(mode='after')
    def _check_decomposition(self) -> 'RegularizedSum':
        scale = max(abs(self.value), abs(self.boundary_term), abs(self.cut_integral), 1e-300)
        if abs(self.value - (self.boundary_term + self.cut_integral)) > 1e-14 * scale:
            raise ValueError('value must equal boundary_term + cut_integral')
        if self.pieces and abs(math.fsum(self.pieces) - self.cut_integral) > 1e-14 * scale:
            raise ValueError('pieces must sum to cut_integral')
        return self


class RegulatedModeSum(BaseModel):
    """Cut-off mode sum Σ_n ω_n·e^{−αω_n}: numerical head plus evenly spaced tail."""

    model_config = ConfigDict(frozen=True)

    ell: int = Field(ge=0)
    alpha: float = Field(gt=0)
    n_max: int = Field(ge=1)
    value: float
    head: float = Field(ge=0, description='Terms n ≤ n_max from the numerical roots')
    tail: float = Field(ge=0, description='Terms n > n_max from the asymptotic spectrum')
    truncation_error_estimate: float = Field(ge=0)
    pieces: list[float] = Field(description='The n_max head terms in order')

    @model_validator(mode='after')
    def _check_split(self) -> 'RegulatedModeSum':
        scale = max(abs(self.value), 1e-300)
        if abs(self.value - (self.head + self.tail)) > 1e-14 * scale:
            raise ValueError('value must equal head + tail')
        if len(self.pieces) != self.n_max:
            raise ValueError('pieces must hold one term per numerical root')
        if abs(math.fsum(self.pieces) - self.head) > 1e-14 * scale:
            raise ValueError('pieces must sum to head')
        return self


class BranchCutIntegrand(BaseModel):
    """The kernel [(πt/d)² − ν²/(ab)]^{1/2}/(e^{2πt} − 1), which starts at its branch point."""

    model_config = ConfigDict(frozen=True)

    nu: float = Field(ge=0)
    geometry: Geometry

    @computed_field
    @property
    def threshold(self) -> float:
        """Branch point t₀ = νξ/(2π)."""
        return self.nu * self.geometry.xi / (2 * math.pi)

    @property
    def scale(self) -> float:
        """Factor (π/d)·e^{−2πt₀} taken out of the substituted kernel."""
        return math.pi / self.geometry.d * math.exp(-2 * math.pi * self.threshold)

    def substituted(self, u: float) -> float:
        """Kernel times dt/du under t = t₀ + u², divided by the scale.

        The square root becomes (π/d)·u·√(2t₀ + u²), so the result is smooth at u = 0 and
        O(1) for every ν.
        """
        t0 = self.threshold
        u2 = u * u
        return (
            2 * u2 * math.sqrt(2 * t0 + u2) * math.exp(-2 * math.pi * u2)
            / -math.expm1(-2 * math.pi * (t0 + u2))
        )


class Correction(BaseModel):
    """A named term of an energy bracket, as a bracket fraction and as an energy."""

    model_config = ConfigDict(frozen=True)

    name: str
    bracket_term: float
    energy: float


class EnergyBreakdown(BaseModel):
    """A Casimir energy with its decomposition and per-area values."""

    model_config = ConfigDict(frozen=True)

    geometry: Geometry
    variant: Variant
    method: Method
    e_bar: float
    e_tilde: float
    e_total: float
    leading: float
    corrections: list[Correction] = Field(default_factory=list)
    bracket: float
    per_area: float
    per_area_printed: float
    area: float = Field(gt=0)
    geometry_factor: float = Field(gt=0, description='(√(ab)/a)² = b/a')
    plate_limit: float
    truncation_error_estimate: float = Field(default=0.0, ge=0)
    reference_difference: float | None = None

    @model_validator(mode='after')
    def _check_totals(self) -> 'EnergyBreakdown':
        if self.e_total != self.e_bar + self.e_tilde:
            raise ValueError('e_total must equal e_bar + e_tilde')
        if self.method is Method.CLOSED_FORM and self.e_bar != 0.0:
            raise ValueError('e_bar vanishes in the closed form')
        if not math.isclose(self.per_area, self.e_total / self.area, rel_tol=1e-15):
            raise ValueError('per_area must equal e_total / area')
        return self

    @computed_field
    @property
    def attractive(self) -> bool:
        """True when the energy is negative.

        Full spheres are attractive at every gap. Half spheres are attractive up to at least
        η = 0.5; for wide shells the positive Hurwitz boundary term outgrows the decaying
        branch-cut sum, and by b ≈ 3.4a (η ≈ 1.3) the energy is repulsive.
        """
        return self.e_total < 0


class ParityFit(BaseModel):
    """Least-squares parity test of the log-derivative in y for one angular index."""

    model_config = ConfigDict(frozen=True)

    ell: int
    nu: float
    points: int
    insufficient_grid: bool = False
    max_power: int
    even_coefficients: list[float] = Field(default_factory=list)
    odd_coefficients: list[float] = Field(default_factory=list)
    odd_threshold: float = 0.0
    condition_number: float = 0.0
    even_residual_rms: float = 0.0
    full_residual_rms: float = 0.0
    noise_floor: float = 0.0
    odd_consistent_with_zero: bool = False
    even_fit_at_noise: bool = False


class CutoffCheck(BaseModel):
    """Closed form against quadrature for one cutoff integral."""

    model_config = ConfigDict(frozen=True)

    n: int
    nu: float
    b: float
    alpha: float
    phi: float
    closed_form: complex
    quadrature: complex
    relative_error: float
    real_part_ratio: float = Field(description='|Re I| / |I| of the quadrature value')
    purely_imaginary: bool


class ParityReport(BaseModel):
    """Numerical evidence that the high-ℓ contribution has no real part."""

    model_config = ConfigDict(frozen=True)

    geometry: Geometry
    ell_list: list[int]
    y_grid: list[float]
    insufficient_grid: bool
    fits: list[ParityFit]
    cutoff_checks: list[CutoffCheck]

    @computed_field
    @property
    def parity_holds(self) -> bool:
        """True when every fit is even to noise level and every cutoff integral is imaginary."""
        if self.insufficient_grid:
            return False
        fits_even = all(fit.odd_consistent_with_zero and fit.even_fit_at_noise for fit in self.fits)
        return fits_even and all(check.purely_imaginary for check in self.cutoff_checks)


class RunConfig(BaseModel):
    """Validated command-line configuration."""

    model_config = ConfigDict(frozen=True)

    subcommand: Subcommand
    a: float = Field(default=1.0, gt=0)
    b: float | None = Field(default=None, gt=0)
    ell: int = Field(default=0, ge=0)
    ell_max: int = Field(default=5, ge=0)
    n_max: int = Field(default=10, ge=1)
    variant: Variant = Variant.FULL_SPHERE
    method: MethodChoice = MethodChoice.BOTH
    quad_tol: float = Field(default=1e-10, gt=0)
    format: OutputFormat = OutputFormat.JSON
    output_path: str | None = None
    eta_list: list[float] = Field(default_factory=lambda: [0.2, 0.1, 0.05, 0.02])
    case: CalibrationCase = CalibrationCase.LINEAR
    summation: SummationVariant = SummationVariant.INTEGER
    ell_list: list[int] = Field(default_factory=lambda: [10, 30])
    y_grid: list[float] = Field(default_factory=list)

    def geometry(self) -> Geometry:
        """Return the configured geometry."""
        if self.b is None:
            raise ValueError(f'--b is required for {self.subcommand.value}')
        return Geometry(a=self.a, b=self.b)


class SpectrumDeviation(BaseModel):
    """How far the numerical roots of one angular index sit from the evenly spaced spectrum."""

    model_config = ConfigDict(frozen=True)

    ell: int
    n_max: int
    max_rel_dev: float
    rel_dev_at_n_max: float
    last_spacing_ratio: float | None = Field(
        default=None, description='(ω_n − ω_{n−1})·d/π at n = n_max'
    )


class LimitScanRow(BaseModel):
    """Closed-form per-area energy at one gap ratio, against the parallel-plate value."""

    model_config = ConfigDict(frozen=True)

    eta: float
    b: float
    d: float
    per_area: float
    plate_limit: float
    ratio: float = Field(description='per_area / plate_limit')
    bracket_ratio: float = Field(description='ratio divided by the b/a factor')


class CalibrationResult(BaseModel):
    """An Abel-Plana engine run on a summand with a known regularized sum."""

    model_config = ConfigDict(frozen=True)

    case: CalibrationCase
    variant: SummationVariant
    value: float
    target: float
    abs_error: float
    boundary_term: float
    cut_integral: float
