"""Johansen cointegration test (reduced-rank VECM eigenvalue procedure).

For a panel of m series in levels and a VAR lag order k, the VECM

    dy[t] = Pi * y[t-1] + Gamma_1 dy[t-1] + ... + Gamma_{k-1} dy[t-k+1] + det

is analyzed through the canonical correlations between dy and the lagged
levels after partialling out the short-run terms.  The trace statistic for
rank r is -T * sum_{i>r} ln(1 - lambda_i) and the max-eigenvalue statistic is
-T * ln(1 - lambda_{r+1}).  Critical values are the MacKinnon-Haug-Michelis
(1999) asymptotic points; p-values interpolate frozen quantile tables of the
asymptotic distributions (log-linear in the survival probability).
"""

import math
from dataclasses import dataclass

import numpy as np

from ..errors import (
    InsufficientDataError,
    ParameterError,
    SingularDesignError,
)
from ..ingest import AlignedPanel
from ..numerics import sym_eigen
from ._johansen_tables import MAX_QUANTILES, PROBS, TRACE_QUANTILES

DET_NONE = "none"
DET_CONSTANT = "constant"
_DETS = (DET_NONE, DET_CONSTANT)

MAX_DIMENSION = 12
DECISION_LEVEL = 0.05


@dataclass(frozen=True)
class CointegrationRow:
    """One rank hypothesis: H0 'at most ``rank_hypothesis`` relations'."""

    rank_hypothesis: int
    eigenvalue: float
    trace_stat: float
    trace_crit_5pct: float
    trace_p: float
    max_stat: float
    max_crit_5pct: float
    max_p: float


@dataclass(frozen=True)
class CointegrationResult:
    """All rank hypotheses plus the rank selected by the trace test at 5%."""

    rows: tuple
    selected_rank: int
    nobs: int
    var_lags: int
    det_spec: str


def select_rank(p_values, level: float = DECISION_LEVEL) -> int:
    """Smallest rank whose null is not rejected; all rejected -> full rank."""
    for r, p in enumerate(p_values):
        if p >= level:
            return r
    return len(list(p_values))


def trace_p_value(stat: float, dimension: int, det_spec: str) -> float:
    """Asymptotic p-value of a trace statistic for ``dimension`` remaining series."""
    return _interp_p(stat, TRACE_QUANTILES[_check_det(det_spec)][_check_dim(dimension)])


def max_p_value(stat: float, dimension: int, det_spec: str) -> float:
    """Asymptotic p-value of a max-eigenvalue statistic."""
    return _interp_p(stat, MAX_QUANTILES[_check_det(det_spec)][_check_dim(dimension)])


def johansen_test(panel: AlignedPanel, var_lags: int = 1,
                  det_spec: str = DET_CONSTANT, roles=None) -> CointegrationResult:
    """Test for the number of cointegrating relations among panel columns.

    Parameters
    ----------
    panel : AlignedPanel
    var_lags : int
        Lag order of the VAR in levels (the VECM then carries var_lags - 1
        lagged differences).
    det_spec : str
        ``none`` or ``constant`` (unrestricted constant).
    roles : sequence or None
        Columns to include; all panel columns by default.
    """
    det_spec = _check_det(det_spec)
    if var_lags < 1:
        raise ParameterError(f"var_lags must be >= 1, got {var_lags}")
    roles = panel.roles if roles is None else list(roles)
    y = panel.matrix(roles)
    t_total, m = y.shape
    if m < 2:
        raise ParameterError(f"cointegration needs at least 2 series, got {m}")
    if m > MAX_DIMENSION:
        raise ParameterError(
            f"critical values are tabulated up to {MAX_DIMENSION} series, got {m}"
        )
    if t_total < 20 * m:
        raise InsufficientDataError(
            f"Johansen test on {m} series needs at least {20 * m} observations, "
            f"got {t_total}"
        )

    dy = np.diff(y, axis=0)
    k = var_lags
    n = t_total - k
    r0 = dy[k - 1:]                      # dy_t
    r1 = y[k - 1:t_total - 1]            # y_{t-1}

    z_cols = []
    for j in range(1, k):
        z_cols.append(dy[k - 1 - j:len(dy) - j])
    if det_spec == DET_CONSTANT:
        z_cols.append(np.ones((n, 1)))
    if z_cols:
        z = np.hstack(z_cols)
        r0 = r0 - z @ np.linalg.lstsq(z, r0, rcond=None)[0]
        r1 = r1 - z @ np.linalg.lstsq(z, r1, rcond=None)[0]

    s00 = r0.T @ r0 / n
    s01 = r0.T @ r1 / n
    s11 = r1.T @ r1 / n
    try:
        l11 = np.linalg.cholesky(s11)
        s00_inv_s01 = np.linalg.solve(s00, s01)
    except np.linalg.LinAlgError:
        raise SingularDesignError(
            "panel moment matrix is singular (duplicated or collinear column)"
        )
    inner = s01.T @ s00_inv_s01
    tmp = np.linalg.solve(l11, inner)
    core = np.linalg.solve(l11, tmp.T).T
    eig = sym_eigen(0.5 * (core + core.T))
    lam = np.clip(eig.eigenvalues, 0.0, 1.0 - 1e-15)

    rows = []
    for r in range(m):
        dim = m - r
        trace_stat = -n * float(np.sum(np.log1p(-lam[r:])))
        max_stat = -n * float(math.log1p(-lam[r]))
        rows.append(
            CointegrationRow(
                rank_hypothesis=r,
                eigenvalue=float(lam[r]),
                trace_stat=trace_stat,
                trace_crit_5pct=_crit_5pct(TRACE_QUANTILES, det_spec, dim),
                trace_p=trace_p_value(trace_stat, dim, det_spec),
                max_stat=max_stat,
                max_crit_5pct=_crit_5pct(MAX_QUANTILES, det_spec, dim),
                max_p=max_p_value(max_stat, dim, det_spec),
            )
        )
    selected = select_rank([row.trace_p for row in rows])
    return CointegrationResult(
        rows=tuple(rows),
        selected_rank=selected,
        nobs=n,
        var_lags=var_lags,
        det_spec=det_spec,
    )


def _check_det(det_spec: str) -> str:
    if det_spec not in _DETS:
        raise ParameterError(
            f"unknown deterministic spec '{det_spec}'; expected one of {_DETS}"
        )
    return det_spec


def _check_dim(dimension: int) -> int:
    if not 1 <= dimension <= MAX_DIMENSION:
        raise ParameterError(
            f"dimension must be in 1..{MAX_DIMENSION}, got {dimension}"
        )
    return dimension


def _crit_5pct(tables, det_spec, dim) -> float:
    return tables[det_spec][dim][PROBS.index(0.95)]


def _interp_p(stat: float, quantiles) -> float:
    """Survival probability by piecewise log-linear interpolation.

    The statistic grid is anchored at (0, survival 1); beyond the last
    tabulated quantile the last segment's exponential tail is extrapolated.
    """
    if not np.isfinite(stat) or stat <= 0.0:
        return 1.0
    q = np.concatenate([[0.0], np.asarray(quantiles)])
    log_s = np.concatenate([[0.0], np.log1p(-np.asarray(PROBS))])
    if stat >= q[-1]:
        slope = (log_s[-1] - log_s[-2]) / max(q[-1] - q[-2], 1e-12)
        return float(min(max(math.exp(log_s[-1] + slope * (stat - q[-1])), 0.0), 1.0))
    idx = int(np.searchsorted(q, stat, side="right")) - 1
    idx = max(idx, 0)
    span = max(q[idx + 1] - q[idx], 1e-12)
    frac = (stat - q[idx]) / span
    return float(min(max(math.exp(log_s[idx] + frac * (log_s[idx + 1] - log_s[idx])), 0.0), 1.0))
