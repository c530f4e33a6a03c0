"""Operator-level verification of the measurement-ensemble duality.

The dual member state at outcome (x, y) is rho^{1/2} m(x,y) rho^{1/2}
normalized, with m the POVM density.  For Gaussian inputs this must equal
the displaced Gaussian with covariance alpha' at the contracted outcome
coordinates; the check reports the worst trace-norm gap over sampled
outcomes on truncated Fock matrices.
"""

import numpy as np

from .core import InvalidForSharp
from .duality import dual_ensemble
from .fock import DEFAULT_N, displacement_fock, gaussian_state_fock


def _psd_sqrt(mat):
    vals, vecs = np.linalg.eigh(mat)
    vals = np.clip(vals, 0.0, None)
    return (vecs * np.sqrt(vals)) @ vecs.conj().T


def _trace_norm(mat):
    return float(np.linalg.svd(mat, compute_uv=False).sum())


def dual_operator_check(alpha, beta, n_max=DEFAULT_N, sample_radius=2.0,
                        samples_per_axis=5):
    """Max trace-norm deviation between operator-built and closed-form dual states."""
    if beta.noise_type != 1:
        raise InvalidForSharp("operator duality check needs a finite-noise POVM")
    from .core import make_covariance

    dual = dual_ensemble(alpha, beta)
    rho_bar = gaussian_state_fock(alpha, n_max).matrix
    rho_beta = gaussian_state_fock(
        make_covariance(beta.beta_q, beta.beta_p), n_max
    ).matrix
    sqrt_bar = _psd_sqrt(rho_bar)
    alpha_prime = make_covariance(dual.alpha_prime_q, dual.alpha_prime_p)
    rho_prime_base = gaussian_state_fock(alpha_prime, n_max).matrix

    # Outcome contraction (x, y) -> (x', y'): kappa (alpha + beta)^{-1}, diagonal.
    kq_scale = np.sqrt(max(1.0 - 0.25 / (alpha.alpha_q * alpha.alpha_p), 0.0))
    cx = kq_scale * alpha.alpha_q / (alpha.alpha_q + beta.beta_q)
    cy = kq_scale * alpha.alpha_p / (alpha.alpha_p + beta.beta_p)

    axis = np.linspace(-sample_radius, sample_radius, samples_per_axis)
    worst = 0.0
    for x in axis:
        for y in axis:
            d = displacement_fock(x, y, n_max).matrix
            m = d @ rho_beta @ d.conj().T
            num = sqrt_bar @ m @ sqrt_bar
            tr = np.trace(num).real
            built = num / tr
            dp = displacement_fock(cx * x, cy * y, n_max).matrix
            closed = dp @ rho_prime_base @ dp.conj().T
            worst = max(worst, _trace_norm(built - closed))
    return worst
