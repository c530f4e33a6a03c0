#!/usr/bin/env python3
"""Try to beat the Gaussian ensemble with small non-Gaussian ensembles.

The regime-C capacity is proven, so the search is a sanity check there: no
feasible discrete ensemble of displaced squeezed states (optionally with a
one-photon admixture) may exceed the closed form.  In regimes L and R the
closed form relies on the unproven Gaussian-maximizer ansatz, so the same
search acts as numerical stress: any feasible excess beyond tolerance would
be a genuinely interesting finding (and gets flagged, not silently
asserted away).
"""

import math

from gausscap import (
    QuadratureGrid,
    SearchConfig,
    hgm_search,
    make_covariance,
    make_noise,
)


def run_case(label, alpha, beta, starts=4, seed=0):
    config = SearchConfig(members=4, starts=starts, max_iter=150, seed=seed,
                          n_max=24, grid=QuadratureGrid(6.0, 48))
    report = hgm_search(alpha, beta, config)
    print(f"--- {label} (regime {report.regime}"
          f"{', hypothetical ceiling' if report.hypothetical else ''}) ---")
    print(f"  ceiling  : {report.ceiling_nats:.6f} nats")
    print(f"  best I   : {report.best_value_nats:.6f} nats "
          f"(gap {report.gap:+.6f})")
    print(f"  feasible={report.feasible}  flagged={report.flagged_excess}  "
          f"evaluations={report.evaluations}")
    for i, m in enumerate(report.ensemble):
        print(f"  member {i}: w={m['weight']:.3f} x={m['x']:+.3f} "
              f"y={m['y']:+.3f} r={m['squeeze_r']:+.3f}")
    print()


if __name__ == "__main__":
    run_case("proven regime C", make_covariance(1, 1), make_noise(0.5, 0.5))
    run_case("open regime L, position measurement",
             make_covariance(1, 2), make_noise(0.2, math.inf))
