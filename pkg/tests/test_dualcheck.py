import math

import pytest

from gausscap.core import InvalidForSharp, make_covariance, make_noise
from gausscap.dualcheck import dual_operator_check


class TestDualOperatorCheck:
    def test_small_truncation_agreement(self):
        worst = dual_operator_check(
            make_covariance(1.0, 1.0), make_noise(0.5, 0.5),
            n_max=30, sample_radius=1.0, samples_per_axis=3,
        )
        assert worst < 1e-4

    def test_improves_with_truncation(self):
        alpha, beta = make_covariance(1.0, 1.0), make_noise(0.2, 5.0)
        coarse = dual_operator_check(alpha, beta, n_max=20,
                                     sample_radius=1.5, samples_per_axis=3)
        fine = dual_operator_check(alpha, beta, n_max=40,
                                   sample_radius=1.5, samples_per_axis=3)
        assert fine <= coarse + 1e-12

    def test_rejects_position_measurements(self):
        alpha = make_covariance(1.0, 1.0)
        with pytest.raises(InvalidForSharp):
            dual_operator_check(alpha, make_noise(0.2, math.inf), n_max=10)
        with pytest.raises(InvalidForSharp):
            dual_operator_check(alpha, make_noise(0.0, math.inf), n_max=10)
