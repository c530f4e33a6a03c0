"""Domain types and Gaussian output primitives for one bosonic mode.

Conventions: hbar = 1, vacuum quadrature variance 1/2, natural logarithms
(nats) everywhere.  Momentum noise beta_p may be +inf (homodyne-like
measurements); the infinite case is dispatched structurally through the
noise type tag, never by evaluating a finite-noise formula at a sentinel.
"""

import math
from dataclasses import dataclass

HBAR = 1.0
VACUUM_VARIANCE = 0.5

# Symplectic form for one mode, quadrature order (q, p).
SYMPLECTIC_FORM = ((0.0, 1.0), (-1.0, 0.0))

# Relative slack accepted on the uncertainty boundary alpha_q*alpha_p = 1/4.
BOUNDARY_RTOL = 1e-12


class GausscapError(Exception):
    """Base class for all library errors."""


class ValidationError(GausscapError):
    """Invalid domain input."""


class HeisenbergViolation(ValidationError):
    pass


class NonPositive(ValidationError):
    pass


class InvalidSharp(ValidationError):
    """beta_q = 0 requires beta_p = +inf."""


class EnergyBelowVacuum(ValidationError):
    pass


class OutOfInterval(ValidationError):
    pass


class InvalidForSharp(ValidationError):
    """Operation undefined for the sharp position measurement."""


class NumericsError(GausscapError):
    """Numerical procedure failed (exit-worthy, not a usage error)."""


class TruncationInsufficient(NumericsError):
    pass


class NegativeDensity(NumericsError):
    pass


class NormalizationFailure(NumericsError):
    pass


@dataclass(frozen=True)
class OneModeCovariance:
    """Diagonal covariance diag(alpha_q, alpha_p) of a centered Gaussian state."""

    alpha_q: float
    alpha_p: float

    def __post_init__(self):
        aq, ap = self.alpha_q, self.alpha_p
        if not (math.isfinite(aq) and math.isfinite(ap)):
            raise NonPositive("covariance entries must be finite")
        if aq <= 0 or ap <= 0:
            raise NonPositive(f"covariance entries must be positive, got ({aq}, {ap})")
        if aq * ap < 0.25 * (1.0 - BOUNDARY_RTOL):
            raise HeisenbergViolation(
                f"alpha_q*alpha_p = {aq * ap} < 1/4 is not an admissible state"
            )


def make_covariance(alpha_q, alpha_p):
    """Validated covariance of a centered one-mode Gaussian state."""
    return OneModeCovariance(float(alpha_q), float(alpha_p))


@dataclass(frozen=True)
class MeasurementNoise:
    """POVM noise diag(beta_q, beta_p); beta_p = +inf for homodyne-like types.

    Type tags: 1 both finite, 2 noisy position (beta_p = +inf), 3 sharp
    position (beta_q = 0, beta_p = +inf).
    """

    beta_q: float
    beta_p: float

    def __post_init__(self):
        bq, bp = self.beta_q, self.beta_p
        if not math.isfinite(bq) or bq < 0:
            raise NonPositive(f"beta_q must be finite and >= 0, got {bq}")
        if bp <= 0 or math.isnan(bp):
            raise NonPositive(f"beta_p must be > 0 (possibly +inf), got {bp}")
        if bq == 0 and math.isfinite(bp):
            raise InvalidSharp("beta_q = 0 is only admissible with beta_p = +inf")
        if math.isfinite(bp) and bq * bp < 0.25 * (1.0 - BOUNDARY_RTOL):
            raise HeisenbergViolation(
                f"beta_q*beta_p = {bq * bp} < 1/4 is not an admissible noise"
            )

    @property
    def noise_type(self):
        if math.isfinite(self.beta_p):
            return 1
        return 3 if self.beta_q == 0 else 2


def make_noise(beta_q, beta_p):
    """Validated measurement noise with derivable type tag."""
    return MeasurementNoise(float(beta_q), float(beta_p))


@dataclass(frozen=True)
class EnergyConstraint:
    """Mean oscillator energy bound E for H = (q^2 + p^2)/2."""

    E: float

    def __post_init__(self):
        if not math.isfinite(self.E) or self.E < 0.5 * (1.0 - BOUNDARY_RTOL):
            raise EnergyBelowVacuum(f"E must be >= 1/2 (vacuum energy), got {self.E}")


def _energy_value(E):
    """Accept an EnergyConstraint or a bare number, validating either way."""
    if isinstance(E, EnergyConstraint):
        return E.E
    return EnergyConstraint(float(E)).E


@dataclass(frozen=True)
class OutputGaussian:
    """Variances of the measurement outcome distribution for a Gaussian input."""

    var_q: float
    var_p: float


def output_density(alpha, beta):
    """Outcome Gaussian of the measurement: noise adds to the state covariance."""
    return OutputGaussian(alpha.alpha_q + beta.beta_q, alpha.alpha_p + beta.beta_p)


def output_entropy_term(alpha, beta):
    """Output differential entropy of a Gaussian state, up to a fixed constant.

    Returns (1/2) ln[(alpha_q+beta_q)(alpha_p+beta_p)] for two-outcome noise,
    (1/2) ln(alpha_q+beta_q) for the position-only types.  The additive
    constant set by the reference measure cancels in every information
    quantity and is never materialized.
    """
    vq = alpha.alpha_q + beta.beta_q
    if beta.noise_type == 1:
        return 0.5 * math.log(vq * (alpha.alpha_p + beta.beta_p))
    return 0.5 * math.log(vq)
