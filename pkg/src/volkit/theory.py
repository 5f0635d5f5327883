"""Closed-form finance calculators.

Discounted cash flow / discounted dividend valuation, CAPM beta and expected
return, the inflation-adjustment curve, and the comparative-static derivative
of the stock price with respect to the real exchange rate implied by a
three-equation goods/money/inflation equilibrium.  All calculators are exact
scalar evaluations of their formulas.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DivergenceError, DomainError, ParameterError, SingularityError

_SINGULARITY_TOL = 1e-12


@dataclass(frozen=True)
class CashflowSchedule:
    """Per-period dividends, a terminal sale value, and one discount rate."""

    dividends: tuple
    terminal_value: float = 0.0
    discount_rate: float = 0.0

    def __post_init__(self):
        dividends = tuple(float(d) for d in self.dividends)
        object.__setattr__(self, "dividends", dividends)
        if not all(map(math.isfinite, dividends)):
            raise ParameterError("dividends must be finite")
        if not math.isfinite(self.terminal_value) or self.terminal_value < 0.0:
            raise ParameterError(
                f"terminal value must be finite and non-negative, got {self.terminal_value}"
            )
        if not math.isfinite(self.discount_rate) or self.discount_rate <= -1.0:
            raise DomainError(
                f"discount rate must exceed -1, got {self.discount_rate}"
            )


@dataclass(frozen=True)
class CapmInputs:
    """Asset and market return dispersion, their correlation, and the rates."""

    sigma_i: float
    sigma_m: float
    rho_im: float
    risk_free: float = 0.0
    expected_market: float = 0.0

    def __post_init__(self):
        if self.sigma_i <= 0.0 or self.sigma_m <= 0.0:
            raise ParameterError("return standard deviations must be positive")
        if abs(self.rho_im) > 1.0:
            raise ParameterError(f"correlation must lie in [-1, 1], got {self.rho_im}")


@dataclass(frozen=True)
class IsLmIaPartials:
    """Partial derivatives of aggregate demand (phi_*) and money demand (l_*).

    phi_s, phi_y, phi_q, and l_y are positive by the underlying comparative
    statics; l_s may take either sign because wealth and substitution effects
    pull money demand in opposite directions as stock prices move.
    """

    phi_s: float
    phi_y: float
    phi_q: float
    l_s: float
    l_y: float

    def __post_init__(self):
        for name in ("phi_s", "phi_y", "phi_q", "l_y"):
            if getattr(self, name) <= 0.0:
                raise ParameterError(f"{name} must be positive, got {getattr(self, name)}")


@dataclass(frozen=True)
class IaCurveInputs:
    """Core inflation, the response slope, and the output gap terms."""

    core_inflation: float
    lambda_: float
    output: float
    natural_output: float

    def __post_init__(self):
        if self.lambda_ <= 0.0:
            raise ParameterError(f"lambda must be positive, got {self.lambda_}")


def present_value(schedule: CashflowSchedule) -> float:
    """Sum of discounted dividends plus the discounted terminal value.

    PV = sum_i D_i / (1+r)^i + TV / (1+r)^n, with n the number of dividend
    periods.
    """
    r = schedule.discount_rate
    total = 0.0
    for i, d in enumerate(schedule.dividends, start=1):
        total += d / (1.0 + r) ** i
    n = len(schedule.dividends)
    total += schedule.terminal_value / (1.0 + r) ** n
    return total


def perpetuity_value(dividend: float, r: float) -> float:
    """Value of a constant dividend held forever: D / r.

    This is the infinite-horizon limit of :func:`present_value` with no
    terminal value; it diverges unless the discount rate is positive.
    """
    if dividend <= 0.0:
        raise ParameterError(f"dividend must be positive, got {dividend}")
    if r <= 0.0:
        raise DivergenceError(
            f"a perpetuity diverges for discount rate {r} (needs r > 0)"
        )
    return dividend / r


def capm_beta(c: CapmInputs) -> float:
    """Systematic-risk loading: rho_im * sigma_i / sigma_m."""
    return c.rho_im * c.sigma_i / c.sigma_m


def capm_expected_return(beta: float, c: CapmInputs) -> float:
    """Risk-free rate plus beta times the market risk premium."""
    return c.risk_free + beta * (c.expected_market - c.risk_free)


def ia_inflation(c: IaCurveInputs) -> float:
    """Inflation on the adjustment curve: pi* + lambda * (Y - Ybar)."""
    return c.core_inflation + c.lambda_ * (c.output - c.natural_output)


def stock_price_fx_sensitivity(p: IsLmIaPartials) -> float:
    """Derivative of the stock price with respect to the real exchange rate.

        dS/dq = - l_y * phi_q / (l_s * (1 - phi_y) + l_y * phi_s)

    Negative whenever l_s > 0 and phi_y < 1 (rising stock prices then raise
    money demand, so a weaker currency depresses stock prices).
    """
    denominator = p.l_s * (1.0 - p.phi_y) + p.l_y * p.phi_s
    if abs(denominator) <= _SINGULARITY_TOL:
        raise SingularityError(
            f"sensitivity is singular: denominator {denominator:.3e}",
            denominator=denominator,
        )
    return -p.l_y * p.phi_q / denominator


def fx_sensitivity_sign_sweep(n: int, seed: int) -> np.ndarray:
    """Randomized sweep of the sensitivity over l_s > 0, phi_y < 1.

    Utility for property checks: draws positive partials with phi_y in (0, 1)
    and returns the n sensitivity values (all of which should be negative).
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    out = np.empty(n)
    for i in range(n):
        p = IsLmIaPartials(
            phi_s=float(rng.uniform(0.01, 5.0)),
            phi_y=float(rng.uniform(0.01, 0.99)),
            phi_q=float(rng.uniform(0.01, 5.0)),
            l_s=float(rng.uniform(0.01, 5.0)),
            l_y=float(rng.uniform(0.01, 5.0)),
        )
        out[i] = stock_price_fx_sensitivity(p)
    return out
