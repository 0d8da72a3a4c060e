from __future__ import annotations

import csv
import io
import json

import pytest

from lislab import cli


def _metrics(out: str) -> dict[str, str]:
    rows = [r for r in csv.reader(io.StringIO(out)) if r and not r[0].startswith("#")]
    assert rows[0] == ["metric", "value"]
    return dict(rows[1:])


def _comments(out: str) -> dict[str, str]:
    pairs = {}
    for line in out.splitlines():
        if line.startswith("# ") and "=" in line:
            key, _, value = line[2:].partition("=")
            pairs[key] = value
    return pairs


def test_lis_basic(run_cli):
    code, out, _ = run_cli("lis", "2,4,3,7,6,1,5")
    assert code == 0
    comments = _comments(out)
    assert comments["lis_length"] == "3"
    assert comments["lds_length"] == "3"
    assert comments["pile_sizes"] == "2 2 3"


def test_lis_bruteforce_crosscheck(run_cli):
    code, out, _ = run_cli("lis", "3,1,2", "--check-bruteforce")
    assert code == 0
    assert _comments(out)["bruteforce_lis"] == "2"


def test_identity_failure_exit_code(run_cli, monkeypatch):
    monkeypatch.setattr(cli, "lis_bruteforce", lambda p: 99)
    code, _, _ = run_cli("lis", "3,1,2", "--check-bruteforce")
    assert code == 4


def test_rsk_prints_grids_then_json(run_cli):
    code, out, _ = run_cli("rsk", "2,4,3,7,6,1,5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "P"
    assert lines[1] == "1 3 5"
    assert "Q" in lines
    doc = json.loads(out[out.index("{"):])
    assert doc["metrics"]["p_rows"] == [[1, 3, 5], [2, 6], [4, 7]]
    assert doc["metrics"]["q_rows"] == [[1, 2, 4], [3, 5], [6, 7]]
    assert doc["metrics"]["round_trip_ok"] is True


def test_rsk_json_mode_is_pure_json(run_cli):
    code, out, _ = run_cli("rsk", "3,1,2", "--format", "json")
    assert code == 0
    json.loads(out)


def test_hook_report(run_cli):
    code, out, _ = run_cli("hook", "3,2,2")
    assert code == 0
    assert _comments(out)["syt_count"] == "21"
    assert "1,5 4 1" in out
    assert "3,2 1" in out


def test_syt_identity(run_cli):
    code, out, _ = run_cli("syt-identity", "--n", "8")
    assert code == 0
    metrics = _metrics(out)
    assert metrics["sum_of_squares"] == "40320"
    assert metrics["ok"] == "true"


def test_expected_lis_exact_table(run_cli):
    code, out, _ = run_cli("expected-lis", "--exact", "--n", "5")
    assert code == 0
    rows = [r for r in csv.reader(io.StringIO(out)) if r and not r[0].startswith("#")]
    assert rows[0] == ["n", "exact", "decimal"]
    assert rows[4] == ["4", "29/12", "2.41666667"]
    assert rows[5][1] == "67/24"


def test_expected_lis_monte_carlo(run_cli):
    code, out, _ = run_cli("expected-lis", "--n", "64", "--samples", "200", "--seed", "5")
    assert code == 0
    metrics = _metrics(out)
    mean = float(metrics["mean_lis"])
    assert 12.0 < mean < 16.0
    assert float(metrics["se_mean"]) > 0


def test_plancherel_schema_and_determinism(run_cli):
    args = ("plancherel", "--n", "4", "--samples", "500", "--seed", "42")
    code1, out1, _ = run_cli(*args)
    code2, out2, _ = run_cli(*args)
    assert code1 == code2 == 0
    assert out1 == out2
    rows = [r for r in csv.reader(io.StringIO(out1)) if r and not r[0].startswith("#")]
    assert rows[0] == ["shape", "count", "empirical", "exact"]
    assert sum(int(r[1]) for r in rows[1:]) == 500
    assert rows[1][0] == "4" and rows[-1][0] == "1 1 1 1"


def test_plancherel_hookwalk_method(run_cli):
    code, out, _ = run_cli(
        "plancherel", "--n", "3", "--samples", "300", "--seed", "1", "--method", "hookwalk"
    )
    assert code == 0
    rows = [r for r in csv.reader(io.StringIO(out)) if r and not r[0].startswith("#")]
    assert sum(int(r[1]) for r in rows[1:]) == 300


def test_boarding_deterministic(run_cli):
    code, out, _ = run_cli("boarding", "--strategy", "back-to-front", "--n", "52")
    assert code == 0
    assert _metrics(out)["lis_length"] == "1"
    code, out, _ = run_cli("boarding", "--strategy", "front-to-back", "--n", "52")
    assert _metrics(out)["lis_length"] == "52"


def test_boarding_random(run_cli):
    code, out, _ = run_cli(
        "boarding", "--strategy", "random", "--n", "52", "--samples", "300", "--seed", "8"
    )
    assert code == 0
    metrics = _metrics(out)
    assert 10.5 < float(metrics["mean_lis"]) < 12.5
    assert metrics["two_sqrt_n"] == "14.4222051"


def test_bounds_small(run_cli):
    code, out, _ = run_cli("bounds", "--n", "2000", "--replicas", "30", "--seed", "3")
    assert code == 0
    comments = _comments(out)
    assert 1.3 < float(comments["mean_greedy_ratio"]) < 1.75
    assert 1.7 < float(comments["mean_chain_ratio"]) < 2.1
    assert int(comments["exceedance_count"]) == 0
    assert float(comments["markov_log10_bound"]) < -1


def test_limit_shape_and_emissions(run_cli, tmp_path):
    curve = tmp_path / "curve.csv"
    boundary = tmp_path / "boundary.csv"
    code, out, _ = run_cli(
        "limit-shape", "--n", "1000", "--samples", "2", "--seed", "4",
        "--emit-curve", str(curve), "--emit-boundary", str(boundary),
    )
    assert code == 0
    assert float(_comments(out)["mean_deviation"]) < 0.2
    curve_rows = list(csv.reader(curve.open()))
    assert curve_rows[0] == ["theta", "x", "y"]
    assert curve_rows[1][1:] == ["2", "0"]
    assert curve_rows[-1][1:] == ["0", "2"]
    boundary_rows = list(csv.reader(boundary.open()))
    assert boundary_rows[0] == ["sample", "x", "y"]
    assert {r[0] for r in boundary_rows[1:]} == {"0", "1"}


def test_tw_moments_and_tabulate(run_cli, tmp_path):
    table = tmp_path / "tw.csv"
    code, out, _ = run_cli("tw", "--moments", "--tabulate", str(table))
    assert code == 0
    metrics = _metrics(out)
    assert abs(float(metrics["mean"]) + 1.7711) < 1e-3
    assert abs(float(metrics["variance"]) - 0.8132) < 1e-3
    assert float(metrics["residual"]) < 1e-8
    rows = list(csv.reader(table.open()))
    assert rows[0] == ["t", "cdf", "density"]
    assert len(rows) == 1602


def test_fluctuations_small(run_cli, tmp_path):
    cdf = tmp_path / "cdf.csv"
    code, out, _ = run_cli(
        "fluctuations", "--n", "400", "--samples", "120", "--seed", "5",
        "--emit-cdf", str(cdf),
    )
    assert code == 0
    assert "warning:" in out
    metrics = _metrics(out)
    assert 0 < float(metrics["ks_distance"]) <= 1
    rows = list(csv.reader(cdf.open()))
    assert rows[0] == ["value", "empirical", "reference"]
    assert len(rows) == 121


def test_out_writes_file_not_stdout(run_cli, tmp_path):
    target = tmp_path / "report.csv"
    code, out, _ = run_cli("hook", "3,2", "--out", str(target))
    assert code == 0
    assert out == ""
    assert "syt_count=5" in target.read_text()


def test_json_format(run_cli):
    code, out, _ = run_cli("syt-identity", "--n", "5", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["metrics"]["sum_of_squares"] == 120
    assert doc["config"]["subcommand"] == "syt-identity"


def test_usage_errors_exit_2(run_cli):
    assert run_cli("plancherel", "--n", "4", "--samples", "10")[0] == 2  # no seed
    assert run_cli("nonsense")[0] == 2
    assert run_cli("lis", "1,1,2")[0] == 2
    assert run_cli("bounds", "--n", "10", "--seed", "1")[0] == 2
    assert run_cli("expected-lis", "--n", "0", "--exact")[0] == 2
    assert run_cli("hook", "2,3")[0] == 2


def test_numerical_failure_exit_3(run_cli):
    assert run_cli("tw", "--tol", "1e-15")[0] == 3
    # too few pooled greedy steps for stable statistics
    assert run_cli("bounds", "--n", "1000", "--replicas", "2", "--seed", "1")[0] == 3


def test_help_exits_zero(run_cli):
    assert run_cli("--help")[0] == 0
    assert run_cli("tw", "--help")[0] == 0


def test_version_flag(run_cli):
    code, out, _ = run_cli("--version")
    assert code == 0
