"""Ensemble-observable duality for one-mode Gaussian measurements.

A measurement of a Gaussian average state rho_alpha induces a dual Gaussian
ensemble: displaced copies of rho_alpha' with displacement covariance
gamma', where alpha' + gamma' = alpha.  The mutual information of the dual
ensemble under the sharp position measurement reproduces the L-regime
capacity formula.
"""

import math
from dataclasses import dataclass

from .core import InvalidForSharp, OneModeCovariance


@dataclass(frozen=True)
class KappaMatrix:
    """Diagonal of sqrt(1 - 1/(4 a_q a_p)) * alpha; zero iff alpha is pure."""

    kappa_q: float
    kappa_p: float


@dataclass(frozen=True)
class DualEnsemble:
    """Dual Gaussian ensemble parameters (alpha', gamma') of a measurement."""

    alpha_prime_q: float
    alpha_prime_p: float
    gamma_prime_q: float
    gamma_prime_p: float
    parent_alpha: OneModeCovariance


def kappa_matrix(alpha):
    aq, ap = alpha.alpha_q, alpha.alpha_p
    factor = math.sqrt(max(1.0 - 0.25 / (aq * ap), 0.0))
    return KappaMatrix(factor * aq, factor * ap)


def dual_ensemble(alpha, beta):
    """Dual ensemble via gamma' = kappa (alpha + beta)^{-1} kappa, alpha' = alpha - gamma'.

    For the position-only measurement (beta_p = +inf) the momentum entries
    pass through unchanged.  Sharp position (type 3) is excluded: the dual
    transform is not defined for it here.
    """
    if beta.noise_type == 3:
        raise InvalidForSharp("duality degenerates for the sharp position measurement")
    aq, ap = alpha.alpha_q, alpha.alpha_p
    k = kappa_matrix(alpha)
    gq = k.kappa_q ** 2 / (aq + beta.beta_q)
    gp = 0.0 if beta.noise_type == 2 else k.kappa_p ** 2 / (ap + beta.beta_p)
    apq, app = aq - gq, ap - gp

    # The same quantities in closed form; the two routes must agree identically.
    apq_closed = aq * (beta.beta_q + 0.25 / ap) / (aq + beta.beta_q)
    app_closed = ap if beta.noise_type == 2 else (
        ap * (beta.beta_p + 0.25 / aq) / (ap + beta.beta_p))
    assert abs(apq - apq_closed) <= 1e-12 * max(1.0, aq)
    assert abs(app - app_closed) <= 1e-12 * max(1.0, ap)

    return DualEnsemble(apq, app, gq, gp, alpha)


def accessible_info_sharp_position(dual, beta):
    """Mutual information of the dual ensemble under sharp position readout.

    Equals (1/2) ln[(alpha'_q + gamma'_q)/alpha'_q]; in regime L this is the
    capacity at fixed alpha.
    """
    aq = dual.alpha_prime_q + dual.gamma_prime_q
    info = 0.5 * math.log(aq / dual.alpha_prime_q)
    # Consistency with the closed form in terms of (alpha, beta).
    par = dual.parent_alpha
    direct = 0.5 * math.log((par.alpha_q + beta.beta_q)
                            / (beta.beta_q + 0.25 / par.alpha_p))
    assert abs(info - direct) <= 1e-10 * max(1.0, abs(direct))
    return info
