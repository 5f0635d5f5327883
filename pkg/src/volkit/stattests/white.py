"""White's heteroskedasticity test.

Squared residuals are regressed on the original regressors, their squares,
and (optionally) their pairwise cross products.  Both forms of the statistic
are reported: n*R-squared against chi-square, and the auxiliary regression's
F statistic.  The null is homoskedasticity; a p-value above the level means
the residual variance shows no dependence on the regressors.
"""

import warnings
from dataclasses import dataclass

import numpy as np

from ..errors import DimensionError, SingularDesignError
from ..numerics import chi2_cdf, ols_solve


@dataclass(frozen=True)
class WhiteResult:
    """Both statistic forms of the test on one residual vector."""

    f_statistic: float
    f_p_value: float
    n_r_squared: float
    chi2_p_value: float
    cross_terms: bool
    df: int
    nobs: int


def decide_homoskedastic(p_value: float, level: float = 0.05) -> bool:
    """True when the null of homoskedasticity is NOT rejected."""
    return p_value >= level


def white_test(residuals, regressors, cross_terms: bool = True) -> WhiteResult:
    """Run the test on regression residuals.

    Parameters
    ----------
    residuals : array_like, shape (n,)
    regressors : array_like, shape (n, k)
        The explanatory variables of the original regression, without the
        intercept column.
    cross_terms : bool
        Include pairwise products (the full form of the test).  If the
        auxiliary design turns rank deficient with cross terms, they are
        dropped with a warning and the result records ``cross_terms=False``.
    """
    e = np.asarray(residuals, dtype=float).ravel()
    x = np.atleast_2d(np.asarray(regressors, dtype=float))
    if x.shape[0] != e.shape[0]:
        raise DimensionError(
            f"residuals ({e.shape[0]}) and regressors ({x.shape[0]}) differ in length"
        )

    target = e**2
    try:
        aux = _aux_design(x, cross_terms)
        fit = ols_solve(aux, target, intercept=True)
    except SingularDesignError:
        if not cross_terms:
            raise
        warnings.warn(
            "auxiliary design is rank deficient with cross terms; "
            "falling back to squares only",
            stacklevel=2,
        )
        cross_terms = False
        aux = _aux_design(x, cross_terms)
        fit = ols_solve(aux, target, intercept=True)

    n = len(e)
    df = aux.shape[1]
    n_r2 = n * fit.r_squared
    chi2_p = min(max(1.0 - chi2_cdf(n_r2, df), 0.0), 1.0)
    return WhiteResult(
        f_statistic=fit.f_statistic,
        f_p_value=fit.f_p_value,
        n_r_squared=float(n_r2),
        chi2_p_value=chi2_p,
        cross_terms=cross_terms,
        df=df,
        nobs=n,
    )


def _aux_design(x: np.ndarray, cross_terms: bool) -> np.ndarray:
    cols = [x, x**2]
    if cross_terms:
        k = x.shape[1]
        for i in range(k):
            for j in range(i + 1, k):
                cols.append((x[:, i] * x[:, j])[:, None])
    return np.hstack(cols)
