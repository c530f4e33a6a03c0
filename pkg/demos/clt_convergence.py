#!/usr/bin/env python3
"""Quantum central-limit behaviour of symmetrized single-photon states.

Mixing n = 2^m copies of |1><1| through the Hadamard-pattern orthogonal
transform leaves each marginal with characteristic function
phi(z/sqrt(n))^(n/2) phi(-z/sqrt(n))^(n/2).  As n grows this converges to
the Gaussian characteristic function with the photon's covariance
(variance 3/2 per quadrature); the sup-grid deviation shrinks like 1/n.
Gaussian inputs are exact fixed points at every n.
"""

import numpy as np

from gausscap import gaussian_charfn, make_covariance, quantum_charfn
from gausscap.clt import clt_convergence_report


def one_photon_table():
    rho = np.zeros((8, 8), dtype=complex)
    rho[1, 1] = 1.0
    phi = quantum_charfn(rho)
    alpha = make_covariance(1.5, 1.5)
    ns = [4, 16, 64, 256, 1024]
    report = clt_convergence_report(phi, alpha, ns, half_width=4.0, nodes=41)
    print("--- input |1><1|, grid |x|,|y| <= 4 ---")
    print(f"{'n':>6s} {'sup deviation':>14s} {'n * dev':>10s}")
    for n, dev in report:
        print(f"{n:6d} {dev:14.6e} {n * dev:10.4f}")
    print("(n * dev flattening out shows the 1/n rate)")


def gaussian_fixed_point():
    alpha = make_covariance(0.9, 0.7)
    report = clt_convergence_report(gaussian_charfn(alpha), alpha, [2, 64])
    print("\n--- Gaussian input is an exact fixed point ---")
    for n, dev in report:
        print(f"  n={n:3d}: sup deviation {dev:.2e}")


if __name__ == "__main__":
    one_photon_table()
    gaussian_fixed_point()
