"""Granger causality: do lags of one series improve the prediction of another
beyond its own lags?

The F statistic compares the restricted regression (the effect on its own
lags) with the unrestricted one (plus the candidate cause's lags):

    F = ((RSS_r - RSS_u) / lags) / (RSS_u / (n - 2*lags - 1))

with n the number of usable observations after lagging.
"""

from dataclasses import dataclass

import numpy as np

from ..errors import AlignmentError, InsufficientDataError, ParameterError
from ..numerics import f_cdf, ols_solve
from ..series import TradingSeries


@dataclass(frozen=True)
class GrangerResult:
    """One directed test: does ``cause`` precede ``effect``?"""

    cause: str
    effect: str
    lags: int
    f_statistic: float
    p_value: float
    nobs: int
    df_denominator: int


def granger_test(cause: TradingSeries, effect: TradingSeries, lags: int = 1,
                 cause_name: str = "cause", effect_name: str = "effect") -> GrangerResult:
    """Test the null that ``cause`` does not Granger-cause ``effect``."""
    if lags < 1:
        raise ParameterError(f"lags must be >= 1, got {lags}")
    if len(cause) != len(effect) or not np.array_equal(cause.dates, effect.dates):
        raise AlignmentError(
            f"{cause_name} and {effect_name} are not on the same calendar"
        )
    n_total = len(effect)
    if n_total <= 3 * lags + 5:
        raise InsufficientDataError(
            f"Granger test with {lags} lags needs more than {3 * lags + 5} "
            f"observations, got {n_total}"
        )

    y = effect.values[lags:]
    own = np.column_stack([effect.values[lags - j:n_total - j] for j in range(1, lags + 1)])
    other = np.column_stack([cause.values[lags - j:n_total - j] for j in range(1, lags + 1)])

    restricted = ols_solve(own, y, intercept=True)
    unrestricted = ols_solve(np.hstack([own, other]), y, intercept=True)

    n = len(y)
    df2 = n - 2 * lags - 1
    rss_gain = max(restricted.rss - unrestricted.rss, 0.0)
    if unrestricted.rss <= 0.0:
        f_stat = np.inf if rss_gain > 0.0 else 0.0
    else:
        f_stat = (rss_gain / lags) / (unrestricted.rss / df2)
    p = granger_p_value(f_stat, lags, df2)
    return GrangerResult(
        cause=cause_name,
        effect=effect_name,
        lags=lags,
        f_statistic=float(f_stat),
        p_value=p,
        nobs=n,
        df_denominator=df2,
    )


def granger_p_value(f_statistic: float, lags: int, df_denominator: int) -> float:
    """Upper-tail F probability for a Granger statistic at its dfs."""
    if not np.isfinite(f_statistic):
        return 0.0
    return min(max(1.0 - f_cdf(f_statistic, lags, df_denominator), 0.0), 1.0)
