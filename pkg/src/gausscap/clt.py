"""Quantum central-limit convergence of symmetrized states, via characteristic functions.

Mixing n = 2^m copies of a state through the Hadamard-pattern orthogonal
symplectic transform leaves each non-trivial marginal with characteristic
function phi(z/sqrt(n))^(n/2) phi(-z/sqrt(n))^(n/2), which converges to the
Gaussian with the state's covariance.  Gaussian inputs are exact fixed
points of the scaling.
"""

import math

import numpy as np

HADAMARD = np.array([[1.0, 1.0], [1.0, -1.0]]) / math.sqrt(2.0)


def gaussian_charfn(alpha):
    """Characteristic function of the centered Gaussian state with covariance alpha."""

    def phi(x, y):
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        return np.exp(-0.5 * (alpha.alpha_p * x ** 2 + alpha.alpha_q * y ** 2))

    return phi


def clt_marginal_charfn(phi, n, x, y):
    """Characteristic function of a mixed marginal after the n-copy transform."""
    if n < 2 or (n & (n - 1)) != 0:
        raise ValueError(f"n must be a power of two >= 2, got {n}")
    s = math.sqrt(n)
    half = n // 2
    return phi(np.asarray(x) / s, np.asarray(y) / s) ** half * \
        phi(-np.asarray(x) / s, -np.asarray(y) / s) ** half


def clt_convergence_report(phi, alpha, n_list, half_width=4.0, nodes=41):
    """Sup-grid deviation from the limiting Gaussian for each n.

    Returns a list of (n, sup |marginal - gaussian|) over the square grid
    |x|, |y| <= half_width.  The sequence is reported as computed; no
    monotonicity is enforced.
    """
    axis = np.linspace(-half_width, half_width, nodes)
    xg, yg = np.meshgrid(axis, axis, indexing="ij")
    target = gaussian_charfn(alpha)(xg, yg)
    report = []
    for n in n_list:
        dev = np.abs(clt_marginal_charfn(phi, n, xg, yg) - target)
        report.append((n, float(dev.max())))
    return report
