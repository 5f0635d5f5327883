"""End-to-end orchestration of the analysis workflow.

Stages run in a fixed order, each recording its outputs (or the reason it was
skipped) in a :class:`ReportBundle`: ingest/align, log returns, volatility
construction, descriptive statistics, unit-root tests, the lagged variable
set with its correlation screen, PCA (only when the screen flags a pair),
the component regression, and the cointegration / causality /
heteroskedasticity battery on the regression's pieces.
"""

import warnings
from dataclasses import dataclass, field

from .. import __version__
from ..ardl import ArdlSpec, fit_ardl
from ..errors import VolkitError
from ..factor import pca, scores, standardize
from ..ingest import (
    ROLE_PRICE,
    AlignedPanel,
    align_panel,
    read_series,
    validate_panel,
)
from ..series import describe, first_difference, log_returns
from ..stattests import (
    NOT_STATIONARY,
    adf_test,
    correlation_matrix,
    granger_test,
    johansen_test,
    multicollinearity_screen,
    white_test,
)
from ..volatility import garch_fit, garch_volatility, monthly_volatility
from .config import PipelineConfig

STAGES = (
    "ingest",
    "returns",
    "volatility",
    "descriptive",
    "adf",
    "correlation",
    "pca",
    "regression",
    "johansen",
    "granger",
    "white",
)

ROLE_YIELD = "YIELD"
ROLE_VOL = "VOL"
LAG_SUFFIX = "(L)"
DIFF_PREFIX = "D."

# the ten analysis outputs a complete run must populate
REQUIRED_OUTPUTS = (
    "descriptive", "adf", "correlation", "pca", "regression",
    "johansen", "granger", "white", "volatility_monthly", "volatility_daily",
)


@dataclass
class StageRecord:
    status: str                # "ok" | "skipped"
    payload: dict = field(default_factory=dict)
    reason: str = ""


@dataclass
class ReportBundle:
    """Machine form of one full run: ordered stages plus run metadata."""

    metadata: dict
    stages: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)

    def record(self, stage: str, payload: dict) -> None:
        self.stages[stage] = StageRecord(status="ok", payload=payload)

    def skip(self, stage: str, reason: str) -> None:
        self.stages[stage] = StageRecord(status="skipped", payload={}, reason=reason)

    def payload(self, stage: str) -> dict:
        return self.stages[stage].payload

    @property
    def populated_outputs(self) -> tuple:
        """Which of the required analysis outputs carry data."""
        have = []
        for name in REQUIRED_OUTPUTS:
            if name == "volatility_monthly":
                ok = "volatility" in self.stages and \
                    self.stages["volatility"].payload.get("monthly") is not None
            elif name == "volatility_daily":
                ok = "volatility" in self.stages and \
                    self.stages["volatility"].payload.get("daily") is not None
            else:
                ok = name in self.stages and self.stages[name].status == "ok" \
                    and bool(self.stages[name].payload)
            if ok:
                have.append(name)
        return tuple(have)


class _StageFailure(VolkitError):
    def __init__(self, stage, cause):
        super().__init__(f"stage '{stage}' failed: {cause}")
        self.stage = stage
        self.cause = cause


def run_pipeline(config: PipelineConfig) -> ReportBundle:
    """Execute every stage on the configured dataset.

    Hard errors abort with a stage-named diagnostic; soft warnings accumulate
    in the bundle.
    """
    bundle = ReportBundle(metadata={
        "config_hash": config.config_hash,
        "version": __version__,
        "seed": config.seed,
        "dataset": {s.role: _basename(s.path) for s in config.series_specs},
    })

    active = {"stage": "ingest"}
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            _run_stages(config, bundle, active)
        except VolkitError as exc:
            if isinstance(exc, _StageFailure):
                raise
            raise _StageFailure(active["stage"], exc) from exc
        bundle.warnings.extend(str(w.message) for w in caught)
    return bundle


def _basename(path):
    import os
    return os.path.basename(path)


def _series_payload(s):
    return {
        "dates": [str(d) for d in s.dates],
        "values": [float(v) for v in s.values],
    }


def _run_stages(config: PipelineConfig, bundle: ReportBundle, active: dict) -> None:
    # ---- ingest / align -------------------------------------------------
    active["stage"] = "ingest"
    series = [(spec.role, read_series(spec)) for spec in config.series_specs]
    panel = align_panel(series, policy=config.alignment,
                        max_gap_days=config.max_gap_days)
    report = validate_panel(panel)
    bundle.record("ingest", {
        "observations": len(panel),
        "first_date": str(panel.dates[0]),
        "last_date": str(panel.dates[-1]),
        "alignment": config.alignment,
        "issues": [
            {"severity": i.severity, "role": i.role, "message": i.message,
             "date": i.date}
            for i in report.issues
        ],
    })
    if not report.ok:
        raise _StageFailure("ingest", "panel validation found non-finite cells")

    # ---- log returns -----------------------------------------------------
    active["stage"] = "returns"
    if ROLE_PRICE not in panel.columns:
        raise _StageFailure("returns", "dataset has no price series to take returns of")
    prices = panel.series(ROLE_PRICE)
    returns = log_returns(prices)
    panel = panel.drop_first(1)
    cols = {ROLE_YIELD: returns.values}
    cols.update({r: v for r, v in panel.columns.items() if r != ROLE_PRICE})
    panel = AlignedPanel(panel.dates, cols)
    bundle.record("returns", {
        "observations": len(returns),
        "mean": float(returns.values.mean()),
        "sd": float(returns.values.std(ddof=1)),
    })

    # ---- volatility -------------------------------------------------------
    active["stage"] = "volatility"
    fit = garch_fit(panel.series(ROLE_YIELD))
    daily_vol = garch_volatility(fit)
    monthly = monthly_volatility(panel.series(ROLE_YIELD))
    panel = panel.with_column(ROLE_VOL, daily_vol.values)
    bundle.record("volatility", {
        "garch": {
            "mu": fit.params.mu,
            "omega": fit.params.omega,
            "alpha": fit.params.alpha,
            "beta": fit.params.beta,
            "log_likelihood": fit.log_likelihood,
            "converged": fit.converged,
            "iterations": fit.iterations,
        },
        "daily": _series_payload(daily_vol),
        "monthly": _series_payload(monthly),
    })

    # ---- descriptive statistics -------------------------------------------
    active["stage"] = "descriptive"
    analysis_roles = [r for r in (ROLE_YIELD, ROLE_VOL) if r in panel.columns]
    analysis_roles += [r for r in panel.columns if r not in analysis_roles]
    rows = []
    for role in analysis_roles:
        st = describe(panel.series(role))
        rows.append({
            "variable": role, "n": st.n, "mean": st.mean, "sd": st.sd,
            "skewness": st.skewness, "kurtosis_excess": st.kurtosis_excess,
            "kurtosis": st.kurtosis, "min": st.min, "max": st.max,
        })
    bundle.record("descriptive", {"rows": rows})

    # ---- unit-root battery --------------------------------------------------
    active["stage"] = "adf"
    adf_rows = []
    for role in analysis_roles:
        level = adf_test(panel.series(role), spec=config.adf_spec,
                         lags=config.adf_lags)
        adf_rows.append(_adf_row(role, level))
        if level.decision == NOT_STATIONARY:
            diffed = adf_test(first_difference(panel.series(role)),
                              spec=config.adf_spec, lags=config.adf_lags)
            adf_rows.append(_adf_row(DIFF_PREFIX + role, diffed))
    bundle.record("adf", {"rows": adf_rows})

    # ---- configured differencing + lagged variable set ----------------------
    active["stage"] = "correlation"
    for role in config.difference_roles:
        if role not in panel.columns:
            raise _StageFailure("correlation", f"difference target '{role}' not in panel")
    if config.difference_roles:
        cols = {}
        for role, values in panel.columns.items():
            if role in config.difference_roles:
                cols[DIFF_PREFIX + role] = values[1:] - values[:-1]
            else:
                cols[role] = values[1:]
        panel = AlignedPanel(panel.dates[1:], cols)

    def _named(role):
        return DIFF_PREFIX + role if role in config.difference_roles else role

    vol_name = _named(ROLE_VOL)
    exog_names = [r for r in panel.columns if r not in (ROLE_YIELD, vol_name)]

    lag_cols = {}
    for role, values in panel.columns.items():
        lag_cols[role] = values[1:]
        if role != ROLE_YIELD:
            lag_cols[role + LAG_SUFFIX] = values[:-1]
    panel = AlignedPanel(panel.dates[1:], lag_cols)

    lagged_set = [vol_name + LAG_SUFFIX]
    for role in exog_names:
        lagged_set += [role, role + LAG_SUFFIX]

    # ---- correlation screen ---------------------------------------------------
    corr = correlation_matrix(panel, exog_names)
    flagged = multicollinearity_screen(corr, config.corr_threshold, exog_names)
    bundle.record("correlation", {
        "roles": exog_names,
        "matrix": [[float(v) for v in row] for row in corr],
        "threshold": config.corr_threshold,
        "flagged": [
            {"first": a, "second": b, "correlation": r} for a, b, r in flagged
        ],
        "lagged_set": lagged_set,
    })

    # ---- PCA ---------------------------------------------------------------
    active["stage"] = "pca"
    if flagged:
        std, means, sds = standardize(panel, lagged_set)
        result = pca(std, lagged_set, rule=config.pca_rule, tau=config.pca_tau,
                     column_means=means, column_sds=sds)
        score_panel = scores(result, std)
        for label in score_panel.labels:
            panel = panel.with_column(label, score_panel.scores[label])
        regressors = score_panel.labels
        bundle.record("pca", {
            "variables": list(result.variables),
            "eigenvalues": [float(v) for v in result.eigenvalues],
            "proportions": [float(v) for v in result.proportions],
            "cumulative": [float(v) for v in result.cumulative],
            "loadings": [[float(v) for v in row] for row in result.loadings],
            "selected_k": result.selected_k,
            "proxies": list(result.proxies),
        })
    else:
        regressors = list(lagged_set)
        bundle.skip("pca", "no correlated pair flagged; regression uses the "
                           "raw lagged variables")

    # ---- component / lagged regression ----------------------------------------
    active["stage"] = "regression"
    spec = ArdlSpec(
        endog_lags=0,
        exog_lags={role: 0 for role in regressors},
        include_intercept=True,
        include_trend=config.regression_trend,
    )
    reg = fit_ardl(panel, vol_name, spec)
    bundle.record("regression", {
        "dependent": vol_name,
        "rows": [
            {"name": _strip_l0(name), "estimate": b, "stderr": se, "t": t, "p": p}
            for name, b, se, t, p in reg.coefficient_table
        ],
        "r_squared": reg.ols.r_squared,
        "f_statistic": reg.ols.f_statistic,
        "f_p_value": reg.ols.f_p_value,
        "rss": reg.ols.rss,
        "effective_n": reg.effective_n,
    })

    # ---- Johansen cointegration ---------------------------------------------
    active["stage"] = "johansen"
    jo = johansen_test(panel, var_lags=config.johansen_lags,
                       det_spec=config.johansen_det,
                       roles=[vol_name] + regressors)
    bundle.record("johansen", {
        "variables": [vol_name] + regressors,
        "rows": [
            {
                "rank_hypothesis": row.rank_hypothesis,
                "eigenvalue": row.eigenvalue,
                "trace_stat": row.trace_stat,
                "trace_p": row.trace_p,
                "max_stat": row.max_stat,
                "max_p": row.max_p,
            }
            for row in jo.rows
        ],
        "selected_rank": jo.selected_rank,
        "nobs": jo.nobs,
    })

    # ---- Granger causality -----------------------------------------------------
    active["stage"] = "granger"
    granger_rows = []
    vol_series = panel.series(vol_name)
    for role in regressors:
        other = panel.series(role)
        for cause, effect, cn, en in (
            (other, vol_series, role, vol_name),
            (vol_series, other, vol_name, role),
        ):
            res = granger_test(cause, effect, lags=config.granger_lags,
                               cause_name=cn, effect_name=en)
            granger_rows.append({
                "cause": res.cause, "effect": res.effect, "lags": res.lags,
                "nobs": res.nobs, "f_statistic": res.f_statistic,
                "p_value": res.p_value,
            })
    bundle.record("granger", {"rows": granger_rows})

    # ---- White heteroskedasticity ------------------------------------------------
    active["stage"] = "white"
    wh = white_test(reg.ols.residuals, panel.matrix(regressors),
                    cross_terms=config.white_cross_terms)
    bundle.record("white", {
        "f_statistic": wh.f_statistic,
        "f_p_value": wh.f_p_value,
        "n_r_squared": wh.n_r_squared,
        "chi2_p_value": wh.chi2_p_value,
        "cross_terms": wh.cross_terms,
        "df": wh.df,
        "homoskedastic_at_5pct": wh.f_p_value >= 0.05,
    })


def _adf_row(label, result):
    return {
        "variable": label,
        "statistic": result.statistic,
        "critical_1pct": result.critical_1pct,
        "critical_5pct": result.critical_5pct,
        "critical_10pct": result.critical_10pct,
        "p_value": result.p_value,
        "lags": result.lags_used,
        "decision": result.decision,
    }


def _strip_l0(name):
    return name[:-3] if name.endswith(".L0") else name
