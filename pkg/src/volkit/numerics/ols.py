"""Ordinary least squares through a QR decomposition.

QR is used instead of the normal equations for conditioning; the normal
equations survive only as an independent oracle in the test suite.
"""

from dataclasses import dataclass

import numpy as np

from ..errors import DimensionError, InsufficientDataError, SingularDesignError
from .distributions import f_cdf, t_cdf

_RANK_TOL = 1e-10


@dataclass(frozen=True)
class OlsFit:
    """Least-squares estimate with the usual inference statistics.

    ``coefficients[0]`` is the intercept when one was requested.  p-values are
    two-sided from the t distribution with ``df_resid`` degrees of freedom;
    the F statistic tests all non-intercept coefficients jointly.
    """

    coefficients: np.ndarray
    standard_errors: np.ndarray
    t_values: np.ndarray
    p_values: np.ndarray
    residuals: np.ndarray
    fitted: np.ndarray
    r_squared: float
    f_statistic: float
    f_p_value: float
    rss: float
    tss: float
    n_obs: int
    df_resid: int
    has_intercept: bool


def ols_solve(x, y, intercept: bool = True) -> OlsFit:
    """Fit ``y = X b + e`` by least squares.

    Parameters
    ----------
    x : array_like, shape (n, k)
        Design matrix (without an intercept column; pass ``intercept=True``
        to prepend one).
    y : array_like, shape (n,)
    intercept : bool
        Prepend a column of ones.

    Raises
    ------
    SingularDesignError
        If the design is rank deficient; ``.column`` names the first column
        (0-based, in the order of the assembled design) that is linearly
        dependent on its predecessors.
    InsufficientDataError
        If there are not more rows than estimated coefficients.
    """
    x = np.atleast_2d(np.asarray(x, dtype=float))
    y = np.asarray(y, dtype=float).ravel()
    if x.ndim != 2:
        raise DimensionError(f"design must be 2-D, got {x.ndim}-D")
    if x.shape[0] != y.shape[0]:
        raise DimensionError(
            f"design has {x.shape[0]} rows but y has {y.shape[0]} entries"
        )
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
        raise DimensionError("design or target contains non-finite values")

    n = x.shape[0]
    if intercept:
        x = np.hstack([np.ones((n, 1)), x])
    k = x.shape[1]
    if n <= k:
        raise InsufficientDataError(
            f"need more than {k} observations for {k} coefficients, got {n}"
        )

    q, r = np.linalg.qr(x)
    diag = np.abs(np.diag(r))
    ref = max(diag.max(), 1e-300)
    bad = np.nonzero(diag < _RANK_TOL * ref)[0]
    if bad.size:
        raise SingularDesignError(
            f"design is rank deficient: column {bad[0]} is linearly dependent "
            "on the preceding columns",
            column=int(bad[0]),
        )

    coef = np.linalg.solve(r, q.T @ y)
    fitted = x @ coef
    resid = y - fitted
    rss = float(resid @ resid)
    df = n - k
    sigma2 = rss / df
    rinv = np.linalg.solve(r, np.eye(k))
    cov = sigma2 * (rinv @ rinv.T)
    se = np.sqrt(np.maximum(np.diag(cov), 0.0))

    with np.errstate(divide="ignore", invalid="ignore"):
        t = np.where(se > 0.0, coef / np.where(se > 0.0, se, 1.0), 0.0)
        t = np.where((se == 0.0) & (np.abs(coef) > 0.0), np.inf * np.sign(coef), t)
    p = np.array([2.0 * (1.0 - t_cdf(abs(tv), df)) if np.isfinite(tv) else 0.0 for tv in t])
    p = np.clip(p, 0.0, 1.0)

    if intercept:
        tss = float(np.sum((y - y.mean()) ** 2))
        df_model = k - 1
    else:
        tss = float(y @ y)
        df_model = k
    if tss > 0.0:
        r2 = 1.0 - rss / tss
    else:
        r2 = 0.0
    r2 = min(max(r2, 0.0), 1.0)

    if df_model > 0 and rss > 0.0 and tss > rss:
        fstat = ((tss - rss) / df_model) / (rss / df)
        fp = 1.0 - f_cdf(fstat, df_model, df)
    elif df_model > 0 and rss == 0.0 and tss > 0.0:
        fstat, fp = np.inf, 0.0
    else:
        fstat, fp = 0.0, 1.0

    return OlsFit(
        coefficients=coef,
        standard_errors=se,
        t_values=t,
        p_values=p,
        residuals=resid,
        fitted=fitted,
        r_squared=r2,
        f_statistic=float(fstat),
        f_p_value=float(fp),
        rss=rss,
        tss=tss,
        n_obs=n,
        df_resid=df,
        has_intercept=intercept,
    )
