"""End-to-end pipeline: stages, branching, determinism, reports, simulation."""

import json
import os

import numpy as np
import pytest

from volkit.errors import ParameterError, VolkitError
from volkit.pipeline import (
    REQUIRED_OUTPUTS,
    STAGES,
    emit_report,
    load_pipeline_config,
    parse_json,
    render_json,
    render_text,
    run_pipeline,
    simulate_dataset,
    write_csv,
)

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), "fixtures", "paperlike")


@pytest.fixture(scope="module")
def fixture_bundle():
    config = load_pipeline_config(os.path.join(FIXTURE_DIR, "dataset.cfg"))
    return run_pipeline(config)


@pytest.fixture()
def dataset(tmp_path):
    files = simulate_dataset(seed=7, n=800, scenario="paper-like",
                             out_dir=str(tmp_path / "ds"))
    return files


# ----------------------------------------------------------------- simulate

def test_simulate_is_byte_deterministic(tmp_path):
    a = simulate_dataset(seed=3, n=600, scenario="paper-like",
                         out_dir=str(tmp_path / "a"))
    b = simulate_dataset(seed=3, n=600, scenario="paper-like",
                         out_dir=str(tmp_path / "b"))
    for role in a:
        with open(a[role], "rb") as fa, open(b[role], "rb") as fb:
            assert fa.read() == fb.read()


def test_simulate_paper_like_hits_target_correlation(tmp_path):
    from volkit.ingest import SeriesSpec, read_series

    files = simulate_dataset(seed=11, n=3000, scenario="paper-like",
                             out_dir=str(tmp_path / "c"))
    fxr = read_series(SeriesSpec("FXR", files["FXR"]))
    cnb = read_series(SeriesSpec("CNB", files["CNB"]))
    corr = np.corrcoef(fxr.values, cnb.values)[0, 1]
    assert corr == pytest.approx(-0.645, abs=0.1)


def test_simulate_validation(tmp_path):
    with pytest.raises(ParameterError):
        simulate_dataset(seed=1, n=600, scenario="fancy", out_dir=str(tmp_path))
    with pytest.raises(ParameterError):
        simulate_dataset(seed=1, n=100, scenario="paper-like", out_dir=str(tmp_path))


# -------------------------------------------------------------- run_pipeline

def test_pipeline_populates_every_stage(fixture_bundle):
    assert list(fixture_bundle.stages) == list(STAGES)
    assert all(r.status == "ok" for r in fixture_bundle.stages.values())
    assert fixture_bundle.populated_outputs == REQUIRED_OUTPUTS


def test_pipeline_stage_order_matches_workflow(fixture_bundle):
    order = list(fixture_bundle.stages)
    for earlier, later in (
        ("ingest", "returns"), ("returns", "volatility"),
        ("volatility", "descriptive"), ("adf", "correlation"),
        ("correlation", "pca"), ("pca", "regression"),
        ("regression", "johansen"), ("johansen", "granger"),
        ("granger", "white"),
    ):
        assert order.index(earlier) < order.index(later)


def test_pipeline_pca_branch_runs_on_fixture(fixture_bundle):
    corr = fixture_bundle.payload("correlation")
    assert any(f["first"] == "FXR" and f["second"] == "CNB"
               for f in corr["flagged"])
    pca = fixture_bundle.payload("pca")
    assert pca["selected_k"] >= 1
    assert len(pca["eigenvalues"]) == 7
    assert sum(pca["eigenvalues"]) == pytest.approx(7.0, abs=1e-8)
    assert corr["lagged_set"] == [
        "VOL(L)", "FXR", "FXR(L)", "CNB", "CNB(L)", "USB", "USB(L)",
    ]


def test_pipeline_regression_uses_components(fixture_bundle):
    reg = fixture_bundle.payload("regression")
    names = [r["name"] for r in reg["rows"]]
    assert names[0] == "const"
    assert all(n.startswith("F") for n in names[1:])
    assert reg["dependent"] == "VOL"


def test_pipeline_threshold_one_skips_pca(dataset):
    ds_dir = os.path.dirname(dataset["config"])
    base = open(dataset["config"], encoding="utf-8").read()
    cfg = os.path.join(ds_dir, "loose.cfg")
    with open(cfg, "w", encoding="utf-8") as fh:
        fh.write(base + "corr_threshold = 1.0\n")
    bundle = run_pipeline(load_pipeline_config(str(cfg)))
    assert bundle.stages["pca"].status == "skipped"
    reg = bundle.payload("regression")
    names = [r["name"] for r in reg["rows"]]
    assert "FXR" in names and "VOL(L)" in names  # raw lagged regressors


def test_pipeline_pca_all_components_matches_raw_regression(dataset):
    ds_dir = os.path.dirname(dataset["config"])
    base = open(dataset["config"], encoding="utf-8").read()
    loose = os.path.join(ds_dir, "loose2.cfg")
    with open(loose, "w", encoding="utf-8") as fh:
        fh.write(base + "corr_threshold = 1.0\n")
    full = os.path.join(ds_dir, "full.cfg")
    with open(full, "w", encoding="utf-8") as fh:
        fh.write(base + "pca_rule = cumulative\npca_tau = 1.0\n")
    raw = run_pipeline(load_pipeline_config(str(loose)))
    pca_all = run_pipeline(load_pipeline_config(str(full)))
    assert pca_all.payload("pca")["selected_k"] == 7
    # same column span -> identical fit quality
    assert raw.payload("regression")["rss"] == pytest.approx(
        pca_all.payload("regression")["rss"], rel=1e-8
    )
    assert raw.payload("regression")["r_squared"] == pytest.approx(
        pca_all.payload("regression")["r_squared"], abs=1e-8
    )


def test_pipeline_difference_roles(dataset):
    ds_dir = os.path.dirname(dataset["config"])
    base = open(dataset["config"], encoding="utf-8").read()
    cfg = os.path.join(ds_dir, "diff.cfg")
    with open(cfg, "w", encoding="utf-8") as fh:
        fh.write(base + "difference = FXR CNB USB\n")
    bundle = run_pipeline(load_pipeline_config(str(cfg)))
    corr = bundle.payload("correlation")
    assert corr["roles"] == ["D.FXR", "D.CNB", "D.USB"]
    assert bundle.payload("regression")["dependent"] == "VOL"


def test_pipeline_aborts_with_stage_name_on_bad_dataset(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("price = missing.csv\nfxr = missing2.csv\n", encoding="utf-8")
    with pytest.raises(VolkitError, match="ingest"):
        run_pipeline(load_pipeline_config(str(cfg)))


# ----------------------------------------------------------------- reports

def test_json_report_deterministic_and_matches_golden(fixture_bundle):
    text1 = render_json(fixture_bundle)
    config = load_pipeline_config(os.path.join(FIXTURE_DIR, "dataset.cfg"))
    text2 = render_json(run_pipeline(config))
    assert text1 == text2
    golden = os.path.join(FIXTURE_DIR, "expected", "report.json")
    with open(golden, encoding="utf-8") as fh:
        assert fh.read() == text1


def test_json_round_trip(fixture_bundle):
    doc = parse_json(render_json(fixture_bundle))
    assert doc["metadata"]["seed"] == 42
    assert list(doc["stages"]) == list(STAGES)
    reparsed = json.loads(render_json(fixture_bundle))
    assert reparsed == doc


def test_json_floats_carry_ten_significant_digits(fixture_bundle):
    text = render_json(fixture_bundle)
    doc = parse_json(text)
    stored = doc["stages"]["regression"]["data"]["rows"][0]["estimate"]
    live = fixture_bundle.payload("regression")["rows"][0]["estimate"]
    assert stored == pytest.approx(live, rel=1e-9)
    assert stored == float(f"{live:.10g}")


def test_text_report_table_headers(fixture_bundle):
    text = render_text(fixture_bundle)
    assert "ADF statistic" in text
    assert "1% Threshold" in text and "5% Threshold" in text
    assert "10% Threshold" in text and "P-value" in text and "Stationarity" in text
    assert "Explanatory Variable" in text and "Standard Error" in text
    assert "Co-integration assumption" in text and "Trace statistic" in text
    assert "is not a Granger reason for" in text
    assert "Prob > chi2" in text


def test_csv_report_files_and_scree_shape(fixture_bundle, tmp_path):
    written = write_csv(fixture_bundle, str(tmp_path))
    names = {os.path.basename(p) for p in written}
    assert {"descriptive.csv", "adf.csv", "correlation.csv",
            "pca_components.csv", "pca_loadings.csv", "regression.csv",
            "johansen.csv", "granger.csv", "white.csv",
            "volatility_daily.csv", "volatility_monthly.csv"} <= names
    with open(tmp_path / "pca_components.csv", encoding="utf-8") as fh:
        rows = fh.read().strip().splitlines()
    assert rows[0].startswith("component,eigenvalue")
    assert len(rows) - 1 == 7  # one row per variable in the lagged set


def test_emit_report_renders_figures_alongside_csv(fixture_bundle, tmp_path):
    written = emit_report(fixture_bundle, "csv", str(tmp_path))
    names = {os.path.basename(p) for p in written}
    assert {"volatility_monthly.png", "volatility_daily.png", "scree.png"} <= names
    for path in written:
        assert os.path.getsize(path) > 0
    plain = emit_report(fixture_bundle, "csv", str(tmp_path / "bare"), figures=False)
    assert not any(p.endswith(".png") for p in plain)


def test_emit_report_format_validation(fixture_bundle, tmp_path):
    from volkit.errors import ConfigurationError

    with pytest.raises(ConfigurationError):
        emit_report(fixture_bundle, "yaml", str(tmp_path))
