"""Command-line interface: subcommands, output files, exit codes."""

import os

import pytest

from volkit.cli import EXIT_DATA, EXIT_OK, EXIT_USAGE, main

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), "fixtures", "paperlike")
FIXTURE_CONFIG = os.path.join(FIXTURE_DIR, "dataset.cfg")
PRICE_CSV = os.path.join(FIXTURE_DIR, "sse.csv")


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_returns_command(capsys, tmp_path):
    out = tmp_path / "returns.csv"
    code, stdout, _ = _run(capsys, "returns", PRICE_CSV, "--out", str(out))
    assert code == EXIT_OK
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "date,return"
    assert len(lines) == 1200  # header + 1199 returns


def test_mvol_command_prints_series(capsys, tmp_path):
    returns = tmp_path / "r.csv"
    _run(capsys, "returns", PRICE_CSV, "--out", str(returns))
    code, stdout, _ = _run(capsys, "mvol", str(returns),
                           "--value-column", "return")
    assert code == EXIT_OK
    assert stdout.splitlines()[0] == "date,mvol"
    assert len(stdout.splitlines()) > 12  # several months of data


def test_garch_command(capsys, tmp_path):
    returns = tmp_path / "r.csv"
    _run(capsys, "returns", PRICE_CSV, "--out", str(returns))
    code, stdout, _ = _run(capsys, "garch", str(returns),
                           "--value-column", "return",
                           "--out", str(tmp_path / "vol.csv"))
    assert code == EXIT_OK
    assert "alpha" in stdout and "beta" in stdout and "converged = True" in stdout
    assert (tmp_path / "vol.csv").exists()


def test_adf_command(capsys, tmp_path):
    returns = tmp_path / "r.csv"
    _run(capsys, "returns", PRICE_CSV, "--out", str(returns))
    code, stdout, _ = _run(capsys, "adf", str(returns),
                           "--value-column", "return", "--spec", "constant")
    assert code == EXIT_OK
    assert "ADF statistic" in stdout and "Stationarity   stationary" in stdout


def test_describe_command(capsys):
    code, stdout, _ = _run(capsys, "describe", PRICE_CSV)
    assert code == EXIT_OK
    assert "Mean" in stdout and "Skewness" in stdout


def test_describe_config_mode(capsys):
    code, stdout, _ = _run(capsys, "describe", "--config", FIXTURE_CONFIG)
    assert code == EXIT_OK
    assert "Variable" in stdout and "VOL" in stdout and "Kurtosis" in stdout


def test_ingest_command(capsys, tmp_path):
    out = tmp_path / "panel.csv"
    code, stdout, _ = _run(capsys, "ingest", "--config", FIXTURE_CONFIG,
                           "--out", str(out))
    assert code == EXIT_OK
    header = out.read_text().splitlines()[0]
    assert header == "date,YIELD-SOURCE-PRICE,FXR,CNB,USB"


def test_pipeline_command_json(capsys, tmp_path):
    code, stdout, _ = _run(capsys, "pipeline", "--config", FIXTURE_CONFIG,
                           "--out", str(tmp_path), "--format", "json")
    assert code == EXIT_OK
    assert (tmp_path / "report.json").exists()
    golden = open(os.path.join(FIXTURE_DIR, "expected", "report.json"), "rb").read()
    assert (tmp_path / "report.json").read_bytes() == golden


def test_pipeline_command_csv_with_figures(capsys, tmp_path):
    code, stdout, _ = _run(capsys, "pipeline", "--config", FIXTURE_CONFIG,
                           "--out", str(tmp_path), "--format", "csv")
    assert code == EXIT_OK
    assert (tmp_path / "adf.csv").exists()
    assert (tmp_path / "scree.png").exists()
    assert (tmp_path / "volatility_daily.png").exists()


def test_stage_commands(capsys):
    for cmd, token in (
        ("corr", "flagged"),
        ("pca", "Eigenvalue"),
        ("regress", "Explanatory Variable"),
        ("johansen", "Trace statistic"),
        ("granger", "Granger reason"),
        ("white", "Prob > chi2"),
    ):
        code, stdout, _ = _run(capsys, cmd, "--config", FIXTURE_CONFIG)
        assert code == EXIT_OK, cmd
        assert token in stdout, cmd


def test_simulate_command(capsys, tmp_path):
    code, stdout, _ = _run(capsys, "simulate", "--seed", "5", "--n", "600",
                           "--scenario", "independent", "--out", str(tmp_path))
    assert code == EXIT_OK
    assert (tmp_path / "dataset.cfg").exists()
    assert (tmp_path / "sse.csv").exists()


def test_theory_commands(capsys):
    cases = (
        (["theory", "pv", "--dividends", "105", "--rate", "0.05"],
         "present_value = 100"),
        (["theory", "perpetuity", "--dividend", "5", "--rate", "0.05"],
         "perpetuity_value = 100"),
        (["theory", "capm-beta", "--sigma-i", "0.3", "--sigma-m", "0.2",
          "--rho", "0.5"], "beta = 0.75"),
        (["theory", "capm-return", "--beta", "1.2", "--risk-free", "0.03",
          "--expected-market", "0.08"], "expected_return = 0.09"),
        (["theory", "ia", "--core", "0.02", "--slope", "0.5", "--output",
          "1.01", "--natural", "1.0"], "inflation = 0.025"),
        (["theory", "fx-sensitivity", "--phi-s", "0.3", "--phi-y", "0.5",
          "--phi-q", "0.2", "--l-s", "0.5", "--l-y", "1.0"],
         "dS_dq = -0.3636363636"),
    )
    for argv, expected in cases:
        code, stdout, _ = _run(capsys, *argv)
        assert code == EXIT_OK, argv
        assert expected in stdout, argv


def test_exit_codes(capsys, tmp_path):
    # usage error: unknown subcommand
    code, _, _ = _run(capsys, "frobnicate")
    assert code == EXIT_USAGE
    # data error: missing file
    code, _, err = _run(capsys, "returns", str(tmp_path / "nope.csv"))
    assert code == EXIT_DATA
    assert "error:" in err
    # usage error: bad config key
    bad = tmp_path / "bad.cfg"
    bad.write_text("price = x.csv\nfxr = y.csv\nwhatever = 3\n", encoding="utf-8")
    code, _, err = _run(capsys, "pipeline", "--config", str(bad),
                        "--out", str(tmp_path))
    assert code == EXIT_USAGE
    # data error inside the pipeline: readable config, unreadable dataset
    ok_cfg = tmp_path / "ok.cfg"
    ok_cfg.write_text("price = x.csv\nfxr = y.csv\n", encoding="utf-8")
    code, _, err = _run(capsys, "pipeline", "--config", str(ok_cfg),
                        "--out", str(tmp_path))
    assert code == EXIT_DATA
    assert "ingest" in err


def test_theory_fx_singularity_maps_to_data_exit(capsys):
    code, _, err = _run(capsys, "theory", "fx-sensitivity", "--phi-s", "0.5",
                        "--phi-y", "2.0", "--phi-q", "0.3", "--l-s", "1.0",
                        "--l-y", "2.0")
    assert code == EXIT_DATA
    assert "singular" in err.lower()
