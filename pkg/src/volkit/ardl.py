"""Autoregressive distributed lag regression ARDL(n, m).

The dependent variable is regressed on n of its own lags and on lags 0..m of
each exogenous variable, plus an optional intercept and linear trend.  With
no exogenous terms the model collapses to an AR(n); with n = 0 it collapses
to a distributed-lag model, and both identities are exact because the design
matrices coincide column for column.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigurationError, InsufficientDataError, ParameterError
from .ingest import AlignedPanel
from .numerics import OlsFit, ols_solve


@dataclass(frozen=True)
class ArdlSpec:
    """Lag structure: endogenous order n, per-exogenous orders m."""

    endog_lags: int = 0
    exog_lags: dict = field(default_factory=dict)
    include_intercept: bool = True
    include_trend: bool = False

    def __post_init__(self):
        if self.endog_lags < 0:
            raise ParameterError(f"endog_lags must be >= 0, got {self.endog_lags}")
        for role, m in self.exog_lags.items():
            if m < 0:
                raise ParameterError(f"exog lag order for {role} must be >= 0, got {m}")
        if (self.endog_lags == 0 and not self.exog_lags
                and not (self.include_intercept or self.include_trend)):
            raise ParameterError("specification has no regressor at all")

    @property
    def max_lag(self) -> int:
        return max([self.endog_lags, *self.exog_lags.values()], default=self.endog_lags)


@dataclass(frozen=True)
class ArdlDesign:
    """Assembled regression arrays with one name per design column."""

    x: np.ndarray
    y: np.ndarray
    names: tuple
    effective_n: int
    dates: np.ndarray


@dataclass(frozen=True)
class ArdlFit:
    """Estimated lag regression with the named coefficient table."""

    spec: ArdlSpec
    dependent: str
    coefficient_table: tuple  # rows of (name, estimate, stderr, t, p)
    ols: OlsFit
    effective_n: int


def build_design(panel: AlignedPanel, dependent: str, spec: ArdlSpec) -> ArdlDesign:
    """Build the regression arrays for a lag specification.

    The first ``max lag`` rows are dropped so every lag is observable; the
    columns are ordered intercept, trend, own lags 1..n, then each exogenous
    variable's lags 0..m.  The trend column counts 1, 2, 3, ... over the
    effective sample.
    """
    if dependent not in panel.columns:
        raise ConfigurationError(f"unknown dependent role '{dependent}'")
    for role in spec.exog_lags:
        if role not in panel.columns:
            raise ConfigurationError(f"unknown exogenous role '{role}'")

    k_lag = spec.max_lag
    n_rows = len(panel) - k_lag
    n_regressors = (
        int(spec.include_intercept) + int(spec.include_trend)
        + spec.endog_lags + sum(m + 1 for m in spec.exog_lags.values())
    )
    if n_rows <= n_regressors + 2:
        raise InsufficientDataError(
            f"panel of length {len(panel)} is too short for max lag {k_lag} "
            f"and {n_regressors} regressors"
        )

    y_full = panel.column(dependent)
    cols, names = [], []
    if spec.include_intercept:
        cols.append(np.ones(n_rows))
        names.append("const")
    if spec.include_trend:
        cols.append(np.arange(1.0, n_rows + 1.0))
        names.append("trend")
    for j in range(1, spec.endog_lags + 1):
        cols.append(y_full[k_lag - j:len(panel) - j])
        names.append(f"{dependent}.L{j}")
    for role, m in spec.exog_lags.items():
        x_full = panel.column(role)
        for j in range(0, m + 1):
            cols.append(x_full[k_lag - j:len(panel) - j])
            names.append(f"{role}.L{j}")

    x = np.column_stack(cols) if cols else np.empty((n_rows, 0))
    return ArdlDesign(
        x=x,
        y=y_full[k_lag:],
        names=tuple(names),
        effective_n=n_rows,
        dates=panel.dates[k_lag:],
    )


def fit_ardl(panel: AlignedPanel, dependent: str, spec: ArdlSpec) -> ArdlFit:
    """Estimate the lag regression by OLS."""
    design = build_design(panel, dependent, spec)
    if spec.include_intercept:
        # ols_solve prepends the intercept itself so R^2 and F use centered sums
        fit = ols_solve(design.x[:, 1:], design.y, intercept=True)
    else:
        fit = ols_solve(design.x, design.y, intercept=False)
    table = tuple(
        (name, float(b), float(se), float(t), float(p))
        for name, b, se, t, p in zip(
            design.names, fit.coefficients, fit.standard_errors,
            fit.t_values, fit.p_values,
        )
    )
    return ArdlFit(
        spec=spec,
        dependent=dependent,
        coefficient_table=table,
        ols=fit,
        effective_n=design.effective_n,
    )


def lag_order_select(panel: AlignedPanel, dependent: str, exog=(),
                     max_endog: int = 4, max_exog: int = 4,
                     criterion: str = "aic",
                     include_intercept: bool = True) -> ArdlSpec:
    """Pick (n, m) over a grid by information criterion.

    Every candidate is evaluated on the common sample implied by the largest
    candidate lag, so criteria are comparable.  All exogenous variables share
    one lag order m; an empty ``exog`` list searches over n only.
    """
    if criterion not in ("aic", "bic"):
        raise ParameterError(f"criterion must be 'aic' or 'bic', got {criterion}")
    if max_endog < 0 or (exog and max_exog < 0):
        raise ParameterError("lag bounds must be non-negative")
    exog = list(exog)
    grid_max = max(max_endog, max_exog if exog else 0)

    best_spec, best_score = None, np.inf
    for n in range(max_endog + 1):
        m_range = range(max_exog + 1) if exog else [None]
        for m in m_range:
            exog_lags = {role: m for role in exog} if exog else {}
            if n == 0 and not exog_lags and not include_intercept:
                continue
            spec = ArdlSpec(
                endog_lags=n,
                exog_lags=exog_lags,
                include_intercept=include_intercept,
            )
            # trim so every candidate regresses over the same rows
            fit = fit_ardl(panel.drop_first(grid_max - spec.max_lag), dependent, spec)
            n_eff = fit.effective_n
            k = len(fit.coefficient_table)
            rss = max(fit.ols.rss, 1e-300)
            if criterion == "aic":
                score = n_eff * np.log(rss / n_eff) + 2.0 * k
            else:
                score = n_eff * np.log(rss / n_eff) + k * np.log(n_eff)
            if score < best_score:
                best_score, best_spec = score, spec
    if best_spec is None:
        raise InsufficientDataError("no admissible candidate in the lag grid")
    return best_spec
