"""Augmented Dickey-Fuller unit-root test.

The test regresses the first difference on the lagged level, lagged
differences, and deterministic terms; the statistic is the t ratio on the
lagged level.  Critical values come from the MacKinnon (2010) response
surfaces and p-values from the MacKinnon (1994, as updated 2010) regression
surface approximation.  The null hypothesis is a unit root; the series is
declared stationary when the statistic falls below the 5% critical value.
"""

from dataclasses import dataclass

import numpy as np

from ..errors import DegenerateInputError, InsufficientDataError, ParameterError
from ..numerics import normal_cdf, ols_solve
from ..series import TradingSeries

SPEC_NONE = "none"
SPEC_CONSTANT = "constant"
SPEC_TREND = "constant+trend"
_SPECS = (SPEC_NONE, SPEC_CONSTANT, SPEC_TREND)

STATIONARY = "stationary"
NOT_STATIONARY = "not-stationary"

# MacKinnon (2010) response surfaces for the asymptotic 1%/5%/10% critical
# values with finite-sample corrections in powers of 1/n (one I(1) variable).
_CRIT_2010 = {
    SPEC_NONE: (
        (-2.56574, -2.2358, -3.627, 0.0),
        (-1.94100, -0.2686, -3.365, 31.223),
        (-1.61682, 0.2656, -2.714, 17.296),
    ),
    SPEC_CONSTANT: (
        (-3.43035, -6.5393, -16.786, -79.433),
        (-2.86154, -2.8903, -4.234, -40.040),
        (-2.56677, -1.5384, -2.809, 0.0),
    ),
    SPEC_TREND: (
        (-3.95877, -9.0531, -28.428, -134.155),
        (-3.41049, -4.3904, -9.036, -45.374),
        (-3.12705, -2.5856, -3.925, -22.380),
    ),
}

# MacKinnon (1994) p-value surfaces: below tau_star use the cubic-free small-p
# polynomial, above it the large-p polynomial; outside [tau_min, tau_max] the
# p-value saturates at 0 or 1.
_PVAL_1994 = {
    SPEC_NONE: {
        "star": -1.04, "min": -19.04, "max": np.inf,
        "small": (0.6344, 1.2378, 3.2496e-2),
        "large": (0.4797, 9.3557e-1, -0.6999e-1, 3.3066e-2),
    },
    SPEC_CONSTANT: {
        "star": -1.61, "min": -18.83, "max": 2.74,
        "small": (2.1659, 1.4412, 3.8269e-2),
        "large": (1.7339, 9.3202e-1, -1.2745e-1, -1.0368e-2),
    },
    SPEC_TREND: {
        "star": -2.89, "min": -16.18, "max": 0.70,
        "small": (3.2512, 1.6047, 4.9588e-2),
        "large": (2.5261, 6.1654e-1, -3.7956e-1, -6.0285e-2),
    },
}


@dataclass(frozen=True)
class AdfResult:
    """Unit-root test outcome with the three conventional critical values."""

    statistic: float
    critical_1pct: float
    critical_5pct: float
    critical_10pct: float
    p_value: float
    lags_used: int
    deterministic_spec: str
    decision: str
    nobs: int


def classify(statistic: float, critical_5pct: float) -> str:
    """Stationarity verdict at the operative 5% level."""
    return STATIONARY if statistic < critical_5pct else NOT_STATIONARY


def critical_values(spec: str, nobs: int) -> tuple:
    """(1%, 5%, 10%) critical values for a sample of ``nobs`` observations."""
    rows = _CRIT_2010[_check_spec(spec)]
    out = []
    for b0, b1, b2, b3 in rows:
        inv = 1.0 / nobs
        out.append(b0 + b1 * inv + b2 * inv**2 + b3 * inv**3)
    return tuple(out)


def p_value(statistic: float, spec: str) -> float:
    """Approximate asymptotic p-value of the test statistic."""
    table = _PVAL_1994[_check_spec(spec)]
    if statistic > table["max"]:
        return 1.0
    if statistic < table["min"]:
        return 0.0
    coefs = table["small"] if statistic <= table["star"] else table["large"]
    z = 0.0
    for c in reversed(coefs):
        z = z * statistic + c
    return min(max(normal_cdf(z), 0.0), 1.0)


def default_max_lags(n: int) -> int:
    """Schwert-style lag ceiling: floor(12 * (n/100)^(1/4))."""
    return int(np.floor(12.0 * (n / 100.0) ** 0.25))


def adf_test(s: TradingSeries, spec: str = SPEC_TREND, lags=None) -> AdfResult:
    """Run the test on one series.

    Parameters
    ----------
    s : TradingSeries
    spec : str
        Deterministic terms: ``none``, ``constant``, or ``constant+trend``.
    lags : int or None
        Number of lagged differences; ``None`` selects the lag in
        0..floor(12*(n/100)^(1/4)) minimizing the AIC on a common sample.
    """
    spec = _check_spec(spec)
    y = s.values
    n = len(y)
    if np.all(y == y[0]):
        raise DegenerateInputError("constant series has no unit-root statistic")

    if lags is None:
        max_lags = default_max_lags(n)
    else:
        if lags < 0:
            raise ParameterError(f"lags must be >= 0, got {lags}")
        max_lags = int(lags)
    if n < 25 + max_lags:
        raise InsufficientDataError(
            f"ADF with {max_lags} lags needs at least {25 + max_lags} "
            f"observations, got {n}"
        )

    if lags is None:
        best_lag = _select_lag_aic(y, max_lags, spec)
    else:
        best_lag = max_lags

    fit, level_idx, nobs = _adf_regression(y, best_lag, spec, trim_to=None)
    stat = float(fit.t_values[level_idx])
    c1, c5, c10 = critical_values(spec, nobs)
    return AdfResult(
        statistic=stat,
        critical_1pct=c1,
        critical_5pct=c5,
        critical_10pct=c10,
        p_value=p_value(stat, spec),
        lags_used=best_lag,
        deterministic_spec=spec,
        decision=classify(stat, c5),
        nobs=nobs,
    )


def _check_spec(spec: str) -> str:
    if spec not in _SPECS:
        raise ParameterError(
            f"unknown deterministic spec '{spec}'; expected one of {_SPECS}"
        )
    return spec


def _adf_regression(y, p, spec, trim_to=None):
    """OLS of dy on [trend?, level, dy lags]; returns (fit, level index, nobs).

    ``trim_to`` fixes the number of leading difference observations dropped so
    lag candidates can be compared on one common sample.
    """
    dy = np.diff(y)
    drop = p if trim_to is None else trim_to
    target = dy[drop:]
    nobs = len(target)
    if nobs <= p + 3:
        raise InsufficientDataError("too few observations for the ADF regression")
    level = y[drop:-1]
    cols = []
    if spec == SPEC_TREND:
        cols.append(np.arange(1.0, nobs + 1.0))
    cols.append(level)
    for j in range(1, p + 1):
        cols.append(dy[drop - j:len(dy) - j])
    x = np.column_stack(cols)
    intercept = spec != SPEC_NONE
    fit = ols_solve(x, target, intercept=intercept)
    level_idx = (1 if intercept else 0) + (1 if spec == SPEC_TREND else 0)
    return fit, level_idx, nobs


def _select_lag_aic(y, max_lags, spec):
    best_lag, best_aic = 0, np.inf
    for p in range(max_lags + 1):
        fit, _, nobs = _adf_regression(y, p, spec, trim_to=max_lags)
        k = len(fit.coefficients)
        rss = max(fit.rss, 1e-300)
        aic = nobs * np.log(rss / nobs) + 2.0 * k
        if aic < best_aic:
            best_aic, best_lag = aic, p
    return best_lag
