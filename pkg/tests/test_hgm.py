import json
import math

from gausscap.core import make_covariance, make_noise
from gausscap.grids import QuadratureGrid
from gausscap.hgm import SearchConfig, SearchReport, hgm_search

FAST = SearchConfig(
    members=3, starts=2, max_iter=40, seed=7, n_max=16,
    grid=QuadratureGrid(5.0, 32),
)


class TestHgmSearch:
    def test_center_regime_stays_below_ceiling(self):
        alpha, beta = make_covariance(1, 1), make_noise(0.5, 0.5)
        report = hgm_search(alpha, beta, FAST)
        assert report.regime == "C"
        assert not report.hypothetical
        assert report.feasible
        assert report.best_value_nats <= report.ceiling_nats + 2e-2
        assert not report.flagged_excess
        assert report.ceiling_nats == math.log(1.5)
        assert report.violation < FAST.feasibility_tol
        assert len(report.ensemble) == FAST.members

    def test_left_regime_marked_hypothetical(self):
        alpha, beta = make_covariance(1, 2), make_noise(0.2, math.inf)
        report = hgm_search(alpha, beta, FAST)
        assert report.regime == "L"
        assert report.hypothetical
        assert report.feasible
        assert report.best_value_nats <= report.ceiling_nats + 2e-2

    def test_deterministic_given_seed(self):
        alpha, beta = make_covariance(1, 1), make_noise(0.5, 0.5)
        r1 = hgm_search(alpha, beta, FAST)
        r2 = hgm_search(alpha, beta, FAST)
        assert r1.best_value_nats == r2.best_value_nats
        assert r1.evaluations == r2.evaluations

    def test_report_round_trips_through_json(self):
        alpha, beta = make_covariance(1, 1), make_noise(0.5, 0.5)
        report = hgm_search(alpha, beta, FAST)
        payload = json.loads(report.to_json())
        assert payload["seed"] == 7
        assert payload["starts"] == 2
        assert SearchReport(**payload).best_value_nats == report.best_value_nats

    def test_zero_iterations_still_feasible(self):
        cfg = SearchConfig(members=3, starts=2, max_iter=0, seed=1, n_max=16,
                           grid=QuadratureGrid(5.0, 32))
        report = hgm_search(make_covariance(1, 1), make_noise(0.5, 0.5), cfg)
        assert report.feasible
        assert report.best_value_nats <= report.ceiling_nats + 1e-3
