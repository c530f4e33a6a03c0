import csv
import io
import json
import math

import pytest
from click.testing import CliRunner

from gausscap.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def run_ok(runner, args, env=None):
    result = runner.invoke(main, args, env=env)
    assert result.exit_code == 0, result.stderr
    return result


class TestCapacityCommand:
    def test_sharp_position(self, runner):
        res = run_ok(runner, ["capacity", "--beta-q", "0", "--beta-p", "inf",
                              "-e", "1.0"])
        payload = json.loads(res.output)
        assert payload["capacity_nats"] == pytest.approx(math.log(2.0), abs=1e-12)
        assert payload["regime"] == "L"
        assert payload["hypothetical"] is True

    def test_center_regime(self, runner):
        res = run_ok(runner, ["capacity", "--beta-q", "0.5", "--beta-p", "0.5",
                              "-e", "1.0"])
        payload = json.loads(res.output)
        assert payload["capacity_nats"] == pytest.approx(math.log(1.5), abs=1e-12)
        assert payload["regime"] == "C"
        assert payload["hypothetical"] is False
        assert payload["optimizer_check_nats"] == pytest.approx(
            payload["capacity_nats"], abs=1e-8
        )

    def test_bits_conversion(self, runner):
        res = run_ok(runner, ["capacity", "--beta-q", "0", "--beta-p", "inf",
                              "-e", "1.0", "--log-base", "bits"])
        payload = json.loads(res.output)
        assert payload["capacity"] == pytest.approx(1.0, abs=1e-12)
        assert payload["log_base"] == "bits"

    def test_invalid_energy_exit_2(self, runner):
        res = runner.invoke(main, ["capacity", "--beta-q", "0.5",
                                   "--beta-p", "0.5", "-e", "0.4"])
        assert res.exit_code == 2

    def test_invalid_noise_exit_2(self, runner):
        res = runner.invoke(main, ["capacity", "--beta-q", "0.1",
                                   "--beta-p", "0.1", "-e", "1.0"])
        assert res.exit_code == 2


class TestRegimeCommand:
    def test_left_case(self, runner):
        res = run_ok(runner, ["regime", "--alpha-q", "1", "--alpha-p", "2",
                              "--beta-q", "0.2", "--beta-p", "inf"])
        payload = json.loads(res.output)
        assert payload["regime"] == "L"
        assert payload["delta_opt"] == pytest.approx(0.125)
        assert payload["capacity_alpha_nats"] == pytest.approx(
            0.6531258267231771, abs=1e-12
        )


class TestDualCommand:
    def test_matches_capacity_in_left_regime(self, runner):
        res = run_ok(runner, ["dual", "--alpha-q", "1", "--alpha-p", "1",
                              "--beta-q", "0.2", "--beta-p", "5"])
        payload = json.loads(res.output)
        assert payload["regime"] == "L"
        assert payload["accessible_info_nats"] == pytest.approx(
            payload["capacity_alpha_nats"], abs=1e-12
        )
        assert payload["alpha_prime"]["q"] + payload["gamma_prime"]["q"] == \
            pytest.approx(1.0, abs=1e-12)

    def test_sharp_rejected_exit_2(self, runner):
        res = runner.invoke(main, ["dual", "--alpha-q", "1", "--alpha-p", "1",
                                   "--beta-q", "0", "--beta-p", "inf"])
        assert res.exit_code == 2


class TestSweepCommand:
    def test_csv_shape_and_values(self, runner):
        res = run_ok(runner, ["sweep", "--beta-q", "0.5", "--beta-p", "0.5",
                              "--energy-min", "0.5", "--energy-max", "2.0",
                              "--steps", "4", "--workers", "1"])
        rows = list(csv.DictReader(io.StringIO(res.output)))
        assert len(rows) == 4
        assert [r["energy"] for r in rows] == ["0.5", "1.0", "1.5", "2.0"]
        assert float(rows[1]["capacity"]) == pytest.approx(math.log(1.5), abs=1e-12)
        assert rows[1]["regime"] == "C"
        caps = [float(r["capacity"]) for r in rows]
        assert caps == sorted(caps)

    def test_parallel_matches_serial(self, runner):
        args = ["sweep", "--beta-q", "0.2", "--beta-p", "inf",
                "--energy-min", "0.6", "--energy-max", "3.0", "--steps", "5"]
        serial = run_ok(runner, args + ["--workers", "1"])
        parallel = run_ok(runner, args + ["--workers", "2"])
        assert serial.output == parallel.output


class TestBoundCommand:
    def test_sharp_bound(self, runner):
        res = run_ok(runner, ["bound", "--beta-q", "0", "-e", "1.0"])
        payload = json.loads(res.output)
        assert payload["upper_bound_nats"] == pytest.approx(math.log(2.0), abs=1e-12)


class TestHgmSearchCommand:
    def test_smoke_json_report(self, runner):
        res = run_ok(runner, ["hgm-search", "--alpha-q", "1", "--alpha-p", "1",
                              "--beta-q", "0.5", "--beta-p", "0.5",
                              "--members", "3", "--starts", "1", "--iters", "20",
                              "--seed", "3", "-n", "14", "--grid-nodes", "24"])
        payload = json.loads(res.output)
        assert payload["regime"] == "C"
        assert payload["seed"] == 3
        assert payload["best_value_nats"] <= payload["ceiling_nats"] + 2e-2

    def test_seed_env_var(self, runner):
        args = ["hgm-search", "--alpha-q", "1", "--alpha-p", "1",
                "--beta-q", "0.5", "--beta-p", "0.5",
                "--members", "3", "--starts", "1", "--iters", "0",
                "-n", "14", "--grid-nodes", "24"]
        res = run_ok(runner, args, env={"GAUSSCAP_SEED": "11"})
        assert json.loads(res.output)["seed"] == 11


class TestCltDemoCommand:
    def test_convergence_table(self, runner):
        res = run_ok(runner, ["clt-demo", "--n-list", "4,64", "--nodes", "21"])
        rows = list(csv.DictReader(io.StringIO(res.output)))
        assert [r["n"] for r in rows] == ["4", "64"]
        devs = [float(r["sup_deviation"]) for r in rows]
        assert devs[1] < devs[0]

    def test_bad_n_list_exit_2(self, runner):
        res = runner.invoke(main, ["clt-demo", "--n-list", "4,abc"])
        assert res.exit_code == 2

    def test_non_power_of_two_exit_2(self, runner):
        res = runner.invoke(main, ["clt-demo", "--n-list", "3"])
        assert res.exit_code == 2
