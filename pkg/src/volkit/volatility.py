"""Volatility construction: monthly realized volatility and GARCH(1,1).

The daily conditional volatility is the square root of the variance path of a
Gaussian GARCH(1,1) with a jointly estimated constant mean,

    sigma2[t] = omega + alpha * eps[t-1]**2 + beta * sigma2[t-1],

fit by maximum likelihood over a smooth reparameterization (log omega; a
logistic map keeping alpha >= 0, beta >= 0, alpha + beta < 1), so the simplex
optimizer never sees an infeasible point.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.signal import lfilter

from .errors import (
    DegenerateInputError,
    InsufficientDataError,
    ParameterError,
)
from .numerics import minimize
from .series import TradingSeries, month_end, month_key

MIN_OBSERVATIONS = 30
SIMULATION_CALENDAR_START = "2010-07-01"


@dataclass(frozen=True)
class GarchParams:
    """GARCH(1,1) parameters with a constant return mean."""

    mu: float
    omega: float
    alpha: float
    beta: float

    def __post_init__(self):
        if not all(map(math.isfinite, (self.mu, self.omega, self.alpha, self.beta))):
            raise ParameterError("GARCH parameters must be finite")
        if self.omega <= 0.0:
            raise ParameterError(f"omega must be positive, got {self.omega}")
        if self.alpha < 0.0 or self.beta < 0.0:
            raise ParameterError("alpha and beta must be non-negative")
        if self.alpha + self.beta >= 1.0:
            raise ParameterError(
                f"alpha + beta must be < 1 for covariance stationarity, "
                f"got {self.alpha + self.beta}"
            )

    @property
    def unconditional_variance(self) -> float:
        return self.omega / (1.0 - self.alpha - self.beta)


@dataclass(frozen=True)
class GarchFit:
    """Fitted parameters plus the conditional-variance path over the sample."""

    params: GarchParams
    log_likelihood: float
    conditional_variance: TradingSeries
    converged: bool
    iterations: int


def monthly_volatility(daily_returns: TradingSeries) -> TradingSeries:
    """Within-month sample standard deviation of daily returns.

    One value per calendar month with at least two return observations, dated
    at the last calendar day of the month; thinner months are omitted with a
    warning rather than silently dropped.
    """
    keys = [month_key(d) for d in daily_returns.dates]
    groups: dict = {}
    for key, value in zip(keys, daily_returns.values):
        groups.setdefault(key, []).append(value)

    kept_dates, kept_values, skipped = [], [], []
    for key in sorted(groups):
        obs = groups[key]
        if len(obs) < 2:
            skipped.append(f"{key[0]:04d}-{key[1]:02d}")
            continue
        kept_dates.append(month_end(*key))
        if min(obs) == max(obs):
            kept_values.append(0.0)  # sd is exactly 0 for equal values
        else:
            kept_values.append(float(np.std(obs, ddof=1)))
    if skipped:
        warnings.warn(
            "months omitted from monthly volatility (fewer than 2 returns): "
            + ", ".join(skipped),
            stacklevel=2,
        )
    if not kept_dates:
        raise InsufficientDataError("no month has two or more return observations")
    return TradingSeries(kept_dates, kept_values)


def variance_path(params: GarchParams, returns: np.ndarray,
                  initial_variance: float) -> np.ndarray:
    """Conditional-variance recursion over a return sample.

    The recursion sigma2[t] = omega + alpha*eps[t-1]**2 + beta*sigma2[t-1] is a
    first-order linear filter in sigma2, so it is evaluated with a compiled
    IIR filter; the arithmetic matches the plain loop term for term.
    """
    eps = np.asarray(returns, dtype=float) - params.mu
    x = np.empty(len(eps))
    x[0] = initial_variance
    x[1:] = params.omega + params.alpha * eps[:-1] ** 2
    return lfilter([1.0], [1.0, -params.beta], x)


def _log_likelihood(returns: np.ndarray, params: GarchParams,
                    initial_variance: float) -> tuple:
    sigma2 = variance_path(params, returns, initial_variance)
    if not np.all(sigma2 > 0.0):
        return -np.inf, sigma2
    eps = returns - params.mu
    ll = -0.5 * np.sum(np.log(2.0 * np.pi * sigma2) + eps**2 / sigma2)
    return float(ll), sigma2


def _logistic(z: float) -> float:
    if z >= 0.0:
        return 1.0 / (1.0 + math.exp(-z))
    e = math.exp(z)
    return e / (1.0 + e)


def _logit(p: float) -> float:
    return math.log(p / (1.0 - p))


def _decode(theta) -> GarchParams:
    mu, log_omega, a, b = theta
    persistence = _logistic(a)          # alpha + beta in (0, 1)
    share = _logistic(b)                # alpha's share of the persistence
    return GarchParams(
        mu=float(mu),
        omega=math.exp(log_omega),
        alpha=persistence * share,
        beta=persistence * (1.0 - share),
    )


def garch_fit(returns: TradingSeries, tolerance: float = 1e-7,
              max_iterations: int = 4000) -> GarchFit:
    """Maximum-likelihood GARCH(1,1) fit of a return series.

    The recursion is initialized at the sample variance of the demeaned
    returns, and the starting point uses variance targeting (alpha 0.05,
    beta 0.90, omega matching the sample variance).  A non-convergent
    optimizer never passes silently: the fit carries ``converged=False`` and
    a warning is emitted.
    """
    r = returns.values
    n = len(r)
    if n < MIN_OBSERVATIONS:
        raise InsufficientDataError(
            f"GARCH estimation needs at least {MIN_OBSERVATIONS} returns, got {n}"
        )
    v0 = float(np.var(r - r.mean(), ddof=1))
    if v0 == 0.0:
        raise DegenerateInputError("constant returns: GARCH variance is undefined")

    alpha0, beta0 = 0.05, 0.90
    start = np.array([
        float(r.mean()),
        math.log((1.0 - alpha0 - beta0) * v0),
        _logit(alpha0 + beta0),
        _logit(alpha0 / (alpha0 + beta0)),
    ])
    step = np.array([0.5 * math.sqrt(v0 / n) + 1e-12, 0.4, 0.4, 0.4])

    def negative_ll(theta):
        ll, _ = _log_likelihood(r, _decode(theta), v0)
        return -ll

    result = minimize(
        negative_ll, start,
        tolerance=tolerance,
        max_iterations=max_iterations,
        initial_step=step,
    )
    params = _decode(result.x)
    ll, sigma2 = _log_likelihood(r, params, v0)
    if not result.converged:
        warnings.warn(
            f"GARCH optimizer did not converge within {max_iterations} iterations; "
            "returning the best point found",
            stacklevel=2,
        )
    return GarchFit(
        params=params,
        log_likelihood=ll,
        conditional_variance=TradingSeries(returns.dates, sigma2),
        converged=result.converged,
        iterations=result.iterations,
    )


def garch_volatility(fit: GarchFit) -> TradingSeries:
    """Daily conditional volatility: the square root of the variance path."""
    cv = fit.conditional_variance
    return TradingSeries(cv.dates, np.sqrt(cv.values))


def business_day_calendar(n: int, start: str = SIMULATION_CALENDAR_START) -> np.ndarray:
    """n consecutive Monday-Friday dates from ``start``."""
    return np.busday_offset(np.datetime64(start, "D"), np.arange(n), roll="forward")


def garch_simulate(params: GarchParams, n: int, seed: int) -> TradingSeries:
    """Simulate a GARCH(1,1) return series.

    Deterministic given the seed: innovations are standard normal draws from
    numpy's PCG64 generator, the variance starts at its unconditional level,
    and the dates are a synthetic weekday calendar.
    """
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    rng = np.random.Generator(np.random.PCG64(seed))
    z = rng.standard_normal(n)
    r = np.empty(n)
    v = params.unconditional_variance
    for t in range(n):
        eps = math.sqrt(v) * z[t]
        r[t] = params.mu + eps
        v = params.omega + params.alpha * eps * eps + params.beta * v
    return TradingSeries(business_day_calendar(n), r)
