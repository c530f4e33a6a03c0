#!/usr/bin/env python3
"""Walk through the closed-form capacity results for all three regimes.

First part: fix the average-state covariance alpha and classify the
measurement into regime L, C or R depending on where the stationary
squeezing falls relative to the admissible interval.  Second part: fix only
the mean energy E and let the optimizer pick alpha, comparing the branch
formulas against a brute-force maximization over the energy shell.
"""

import math

import numpy as np

from gausscap import (
    capacity_alpha,
    capacity_energy,
    classify_regime,
    e_closure,
    make_covariance,
    make_noise,
    optimal_squeezing,
    output_entropy_term,
    upper_bound,
)

INF = math.inf


def fixed_alpha_table():
    cases = [
        ("heterodyne-like, C", (1.0, 1.0), (0.5, 0.5)),
        ("skewed noise, L", (1.0, 2.0), (0.2, 5.0)),
        ("mirrored noise, R", (2.0, 1.0), (5.0, 0.2)),
        ("noisy position, L", (1.0, 2.0), (0.2, INF)),
        ("sharp position, L", (1.0, 2.0), (0.0, INF)),
    ]
    print("--- capacity at fixed average covariance ---")
    print(f"{'case':24s} {'regime':6s} {'delta*':>8s} {'entropy':>9s} "
          f"{'closure':>9s} {'capacity':>9s}")
    for label, (aq, ap), (bq, bp) in cases:
        alpha = make_covariance(aq, ap)
        beta = make_noise(bq, bp)
        reg = classify_regime(alpha, beta).value
        print(f"{label:24s} {reg:6s} {optimal_squeezing(alpha, beta):8.4f} "
              f"{output_entropy_term(alpha, beta):9.5f} "
              f"{e_closure(alpha, beta):9.5f} "
              f"{capacity_alpha(alpha, beta):9.5f}")


def energy_constrained_table():
    print("\n--- energy-constrained capacity ---")
    print(f"{'beta':>12s} {'E':>5s} {'regime':>6s} {'capacity':>9s} "
          f"{'check':>9s} {'bound':>9s}")
    for bq, bp in [(0.5, 0.5), (0.2, 5.0), (0.2, INF), (0.0, INF)]:
        for e in (0.6, 1.0, 3.0):
            if e <= 0.5 + bq:
                continue
            res = capacity_energy(make_noise(bq, bp), e)
            bound = upper_bound(bq, e) if bp == INF else float("nan")
            tag = res.regime.value + ("?" if res.hypothetical else "")
            print(f"({bq:4.1f},{bp!s:>5}) {e:5.2f} {tag:>6s} "
                  f"{res.capacity_nats:9.5f} {res.optimizer_check_nats:9.5f} "
                  f"{bound:9.5f}")
    print("('?' marks regimes where the Gaussian-maximizer ansatz is unproven;")
    print(" 'check' is a direct numeric maximization over alpha_q+alpha_p=2E)")


def shell_scan(bq=0.2, bp=5.0, e=1.5):
    """Show the capacity profile along the energy shell for one noise."""
    beta = make_noise(bq, bp)
    spread = math.sqrt(e * e - 0.25)
    print(f"\n--- capacity along the shell alpha_q+alpha_p={2 * e} "
          f"(beta=({bq},{bp})) ---")
    for ap in np.linspace(e - spread, e + spread, 9):
        alpha = make_covariance(2 * e - ap, ap)
        print(f"  alpha_p={ap:6.3f}  {classify_regime(alpha, beta).value}  "
              f"{capacity_alpha(alpha, beta):.6f}")
    res = capacity_energy(beta, e)
    print(f"  optimum at alpha_p={res.optimal_alpha.alpha_p:.6f}: "
          f"{res.capacity_nats:.6f}")


if __name__ == "__main__":
    fixed_alpha_table()
    energy_constrained_table()
    shell_scan()
