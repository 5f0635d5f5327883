"""Report rendering: text tables, per-table CSV files, one JSON document.

Text tables print at 4 decimals; CSV and JSON carry 10 significant digits.
The JSON document is written by a small serializer with explicit float
formatting so the same bundle always produces the same bytes.
"""

import datetime as _dt
import json
import os

from ..errors import ConfigurationError
from .run import ReportBundle

FORMATS = ("text", "csv", "json")


def fmt10(x) -> str:
    """10-significant-digit float formatting used in every delimited output."""
    return f"{float(x):.10g}"


def _f4(x) -> str:
    return f"{float(x):.4f}"


# --------------------------------------------------------------------- json

def render_json(bundle: ReportBundle) -> str:
    doc = {
        "metadata": bundle.metadata,
        "stages": {
            name: {
                "status": record.status,
                **({"reason": record.reason} if record.status == "skipped" else {}),
                **({"data": record.payload} if record.payload else {}),
            }
            for name, record in bundle.stages.items()
        },
        "warnings": list(bundle.warnings),
    }
    out = []
    _write_json(doc, out, 0)
    return "".join(out) + "\n"


def parse_json(text: str) -> dict:
    """Inverse of :func:`render_json` (plain JSON)."""
    return json.loads(text)


def _write_json(obj, out, depth):
    pad = "  " * depth
    inner = "  " * (depth + 1)
    if isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{\n")
        for i, (key, value) in enumerate(obj.items()):
            out.append(f"{inner}{json.dumps(str(key))}: ")
            _write_json(value, out, depth + 1)
            out.append(",\n" if i < len(obj) - 1 else "\n")
        out.append(pad + "}")
    elif isinstance(obj, (list, tuple)):
        if not obj:
            out.append("[]")
            return
        simple = all(isinstance(v, (int, float, str, bool, type(None))) for v in obj)
        if simple:
            out.append("[" + ", ".join(_scalar(v) for v in obj) + "]")
        else:
            out.append("[\n")
            for i, value in enumerate(obj):
                out.append(inner)
                _write_json(value, out, depth + 1)
                out.append(",\n" if i < len(obj) - 1 else "\n")
            out.append(pad + "]")
    else:
        out.append(_scalar(obj))


def _scalar(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return fmt10(value)
    if isinstance(value, int):
        return str(value)
    if value is None:
        return "null"
    return json.dumps(str(value))


# --------------------------------------------------------------------- text

def render_text(bundle: ReportBundle) -> str:
    lines = []
    meta = bundle.metadata
    lines.append("Analysis report")
    lines.append("=" * 70)
    lines.append(f"generated: {_dt.datetime.now().isoformat(timespec='seconds')}")
    lines.append(f"config hash: {meta.get('config_hash', '')}   "
                 f"version: {meta.get('version', '')}   seed: {meta.get('seed', '')}")
    lines.append("")

    for name, record in bundle.stages.items():
        title = name.upper()
        lines.append(title)
        lines.append("-" * len(title))
        if record.status == "skipped":
            lines.append(f"skipped: {record.reason}")
            lines.append("")
            continue
        renderer = _TEXT_RENDERERS.get(name)
        if renderer:
            lines.extend(renderer(record.payload))
        lines.append("")

    if bundle.warnings:
        lines.append("WARNINGS")
        lines.append("--------")
        lines.extend(f"- {w}" for w in bundle.warnings)
        lines.append("")
    return "\n".join(lines)


def _table(header, rows):
    widths = [len(h) for h in header]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    out = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(header))]
    for row in rows:
        out.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)))
    return out


def _text_ingest(data):
    lines = [
        f"observations: {data['observations']}   "
        f"{data['first_date']} .. {data['last_date']}   "
        f"alignment: {data['alignment']}",
    ]
    for issue in data["issues"]:
        where = f" at {issue['date']}" if issue.get("date") else ""
        lines.append(f"{issue['severity']}: {issue['role']} {issue['message']}{where}")
    return lines


def _text_returns(data):
    return [f"observations: {data['observations']}   "
            f"mean: {data['mean']:.6f}   sd: {data['sd']:.6f}"]


def _text_volatility(data):
    g = data["garch"]
    return [
        "GARCH(1,1): mu={mu:.6g}  omega={omega:.6g}  alpha={alpha:.4f}  "
        "beta={beta:.4f}".format(**{k: g[k] for k in ("mu", "omega", "alpha", "beta")}),
        f"log-likelihood: {g['log_likelihood']:.4f}   converged: {g['converged']}"
        f"   iterations: {g['iterations']}",
        f"daily volatility points: {len(data['daily']['values'])}   "
        f"monthly volatility points: {len(data['monthly']['values'])}",
    ]


def _text_descriptive(data):
    header = ["Variable", "N", "Mean", "SD", "Skewness", "Kurtosis", "Min", "Max"]
    rows = [
        [r["variable"], str(r["n"]), _f4(r["mean"]), _f4(r["sd"]),
         _f4(r["skewness"]), _f4(r["kurtosis_excess"]), _f4(r["min"]), _f4(r["max"])]
        for r in data["rows"]
    ]
    return _table(header, rows) + ["(Kurtosis column reports excess kurtosis; "
                                   "raw kurtosis = excess + 3)"]


def _text_adf(data):
    header = ["Variable", "ADF statistic", "1% Threshold", "5% Threshold",
              "10% Threshold", "P-value", "Stationarity"]
    rows = [
        [r["variable"], _f4(r["statistic"]), _f4(r["critical_1pct"]),
         _f4(r["critical_5pct"]), _f4(r["critical_10pct"]), _f4(r["p_value"]),
         "Stationary" if r["decision"] == "stationary" else "Not stationary"]
        for r in data["rows"]
    ]
    return _table(header, rows)


def _text_correlation(data):
    roles = data["roles"]
    header = [""] + roles
    rows = [
        [roles[i]] + [f"{data['matrix'][i][j]:.3f}" for j in range(len(roles))]
        for i in range(len(roles))
    ]
    lines = _table(header, rows)
    if data["flagged"]:
        for f in data["flagged"]:
            lines.append(f"flagged |r| >= {data['threshold']}: "
                         f"({f['first']}, {f['second']}) = {f['correlation']:.3f}")
    else:
        lines.append(f"no pair exceeds |r| >= {data['threshold']}")
    return lines


def _text_pca(data):
    k = len(data["eigenvalues"])
    header = ["Index"] + [f"F{i + 1}" for i in range(k)]
    rows = [
        ["Eigenvalue"] + [_f4(v) for v in data["eigenvalues"]],
        ["Proportion"] + [_f4(v) for v in data["proportions"]],
        ["Cumulative"] + [_f4(v) for v in data["cumulative"]],
    ]
    lines = _table(header, rows)
    lines.append(f"components retained: {data['selected_k']}")
    lines.append("")
    header = ["Variables"] + [f"F{i + 1}" for i in range(data["selected_k"])]
    rows = [
        [var] + [f"{data['loadings'][i][j]:.5f}" for j in range(data["selected_k"])]
        for i, var in enumerate(data["variables"])
    ]
    lines.extend(_table(header, rows))
    for j, proxy in enumerate(data["proxies"][:data["selected_k"]]):
        if proxy:
            lines.append(f"F{j + 1} acts as a proxy for {proxy}")
    return lines


def _text_regression(data):
    header = ["Explanatory Variable", "Coefficient", "Standard Error",
              "T-value", "P-value"]
    rows = [
        [r["name"], f"{r['estimate']:.7g}", f"{r['stderr']:.7g}",
         _f4(r["t"]), _f4(r["p"])]
        for r in data["rows"]
    ]
    lines = _table(header, rows)
    lines.append(f"R-squared: {data['r_squared']:.4f}   "
                 f"F: {data['f_statistic']:.4f} (p {data['f_p_value']:.4f})   "
                 f"n: {data['effective_n']}")
    return lines


def _text_johansen(data):
    names = {0: "No cointegrating relationship",
             1: "One cointegrating relationship"}
    header = ["Co-integration assumption", "Eigenvalue", "Trace statistic",
              "Trace P-value", "Max statistic", "Max P-value"]
    rows = []
    for r in data["rows"]:
        label = names.get(r["rank_hypothesis"],
                          f"{r['rank_hypothesis']} cointegrating relationships")
        rows.append([label, _f4(r["eigenvalue"]), _f4(r["trace_stat"]),
                     _f4(r["trace_p"]), _f4(r["max_stat"]), _f4(r["max_p"])])
    lines = _table(header, rows)
    lines.append(f"selected rank: {data['selected_rank']}   "
                 f"(variables: {', '.join(data['variables'])})")
    return lines


def _text_granger(data):
    header = ["Hypothesis", "Sample number", "F-statistic", "P-value"]
    rows = [
        [f"{r['cause']} is not a Granger reason for {r['effect']}",
         str(r["nobs"]), _f4(r["f_statistic"]), _f4(r["p_value"])]
        for r in data["rows"]
    ]
    return _table(header, rows)


def _text_white(data):
    lines = [
        f"F-statistic  {_f4(data['f_statistic'])}    P-value      {_f4(data['f_p_value'])}",
        f"nR^2         {_f4(data['n_r_squared'])}    Prob > chi2  {_f4(data['chi2_p_value'])}",
        f"cross terms: {data['cross_terms']}   auxiliary df: {data['df']}",
    ]
    verdict = "no heteroskedasticity detected at 5%" \
        if data["homoskedastic_at_5pct"] else "heteroskedasticity detected at 5%"
    lines.append(verdict)
    return lines


_TEXT_RENDERERS = {
    "ingest": _text_ingest,
    "returns": _text_returns,
    "volatility": _text_volatility,
    "descriptive": _text_descriptive,
    "adf": _text_adf,
    "correlation": _text_correlation,
    "pca": _text_pca,
    "regression": _text_regression,
    "johansen": _text_johansen,
    "granger": _text_granger,
    "white": _text_white,
}


# ---------------------------------------------------------------------- csv

def _csv_rows(stage, data):
    if stage == "descriptive":
        yield "descriptive.csv", ["variable", "n", "mean", "sd", "skewness",
                                  "kurtosis_excess", "min", "max"], [
            [r["variable"], str(r["n"])] + [fmt10(r[k]) for k in
                                            ("mean", "sd", "skewness",
                                             "kurtosis_excess", "min", "max")]
            for r in data["rows"]
        ]
    elif stage == "adf":
        yield "adf.csv", ["variable", "statistic", "critical_1pct",
                          "critical_5pct", "critical_10pct", "p_value", "lags",
                          "decision"], [
            [r["variable"]] + [fmt10(r[k]) for k in
                               ("statistic", "critical_1pct", "critical_5pct",
                                "critical_10pct", "p_value")]
            + [str(r["lags"]), r["decision"]]
            for r in data["rows"]
        ]
    elif stage == "correlation":
        roles = data["roles"]
        yield "correlation.csv", ["variable"] + roles, [
            [roles[i]] + [fmt10(v) for v in data["matrix"][i]]
            for i in range(len(roles))
        ]
    elif stage == "pca":
        yield "pca_components.csv", ["component", "eigenvalue", "proportion",
                                     "cumulative"], [
            [str(i + 1), fmt10(data["eigenvalues"][i]),
             fmt10(data["proportions"][i]), fmt10(data["cumulative"][i])]
            for i in range(len(data["eigenvalues"]))
        ]
        labels = [f"F{j + 1}" for j in range(len(data["eigenvalues"]))]
        yield "pca_loadings.csv", ["variable"] + labels, [
            [var] + [fmt10(v) for v in data["loadings"][i]]
            for i, var in enumerate(data["variables"])
        ]
    elif stage == "regression":
        yield "regression.csv", ["name", "estimate", "stderr", "t", "p"], [
            [r["name"]] + [fmt10(r[k]) for k in ("estimate", "stderr", "t", "p")]
            for r in data["rows"]
        ]
    elif stage == "johansen":
        yield "johansen.csv", ["rank_hypothesis", "eigenvalue", "trace_stat",
                               "trace_p", "max_stat", "max_p"], [
            [str(r["rank_hypothesis"])] + [fmt10(r[k]) for k in
                                           ("eigenvalue", "trace_stat",
                                            "trace_p", "max_stat", "max_p")]
            for r in data["rows"]
        ]
    elif stage == "granger":
        yield "granger.csv", ["cause", "effect", "lags", "nobs", "f_statistic",
                              "p_value"], [
            [r["cause"], r["effect"], str(r["lags"]), str(r["nobs"]),
             fmt10(r["f_statistic"]), fmt10(r["p_value"])]
            for r in data["rows"]
        ]
    elif stage == "white":
        yield "white.csv", ["f_statistic", "f_p_value", "n_r_squared",
                            "chi2_p_value", "cross_terms", "df"], [
            [fmt10(data["f_statistic"]), fmt10(data["f_p_value"]),
             fmt10(data["n_r_squared"]), fmt10(data["chi2_p_value"]),
             str(data["cross_terms"]).lower(), str(data["df"])]
        ]
    elif stage == "volatility":
        for key, filename in (("daily", "volatility_daily.csv"),
                              ("monthly", "volatility_monthly.csv")):
            series = data[key]
            yield filename, ["date", "value"], [
                [d, fmt10(v)] for d, v in zip(series["dates"], series["values"])
            ]


def write_csv(bundle: ReportBundle, out_dir) -> list:
    """One CSV per table/series; returns the paths written."""
    os.makedirs(out_dir, exist_ok=True)
    written = []
    for stage, record in bundle.stages.items():
        if record.status != "ok":
            continue
        for filename, header, rows in _csv_rows(stage, record.payload):
            path = os.path.join(out_dir, filename)
            with open(path, "w", encoding="utf-8", newline="") as fh:
                fh.write(",".join(header) + "\n")
                for row in rows:
                    fh.write(",".join(row) + "\n")
            written.append(path)
    return written


# ------------------------------------------------------------------- driver

def emit_report(bundle: ReportBundle, format: str, out_dir,
                figures: bool = True) -> list:
    """Write the bundle in one format; returns the files created.

    The csv path also renders the volatility and scree figures as PNG files
    next to the delimited data unless ``figures`` is off.
    """
    if format not in FORMATS:
        raise ConfigurationError(f"unknown report format '{format}'")
    os.makedirs(out_dir, exist_ok=True)
    written = []
    if format == "text":
        path = os.path.join(out_dir, "report.txt")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(render_text(bundle))
        written.append(path)
    elif format == "json":
        path = os.path.join(out_dir, "report.json")
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(render_json(bundle))
        written.append(path)
    else:
        written.extend(write_csv(bundle, out_dir))
        if figures:
            from .figures import render_figures
            written.extend(render_figures(bundle, out_dir))
    return written
