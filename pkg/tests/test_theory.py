"""Closed-form valuation and comparative-static calculators."""

import numpy as np
import pytest

from volkit.errors import DivergenceError, DomainError, ParameterError, SingularityError
from volkit.theory import (
    CapmInputs,
    CashflowSchedule,
    IaCurveInputs,
    IsLmIaPartials,
    capm_beta,
    capm_expected_return,
    fx_sensitivity_sign_sweep,
    ia_inflation,
    perpetuity_value,
    present_value,
    stock_price_fx_sensitivity,
)


# ------------------------------------------------------------ present value

def test_present_value_zero_rate_is_plain_sum():
    s = CashflowSchedule(dividends=(3.0, 4.0, 5.0), terminal_value=50.0, discount_rate=0.0)
    assert present_value(s) == pytest.approx(62.0, rel=1e-15)


def test_present_value_single_period():
    s = CashflowSchedule(dividends=(105.0,), terminal_value=0.0, discount_rate=0.05)
    assert present_value(s) == pytest.approx(100.0, rel=1e-12)


def test_present_value_decreasing_in_rate():
    previous = np.inf
    for r in np.linspace(0.01, 0.20, 25):
        s = CashflowSchedule(dividends=(5.0,) * 10, terminal_value=100.0, discount_rate=r)
        value = present_value(s)
        assert value < previous
        previous = value


def test_present_value_linear_in_cashflows():
    d1 = (1.0, 2.0, 3.0)
    d2 = (4.0, 0.0, -1.0)
    r = 0.07
    combined = tuple(2.0 * a + 3.0 * b for a, b in zip(d1, d2))
    lhs = present_value(CashflowSchedule(combined, 0.0, r))
    rhs = (2.0 * present_value(CashflowSchedule(d1, 0.0, r))
           + 3.0 * present_value(CashflowSchedule(d2, 0.0, r)))
    assert lhs == pytest.approx(rhs, rel=1e-12)


def test_present_value_domain_error():
    with pytest.raises(DomainError):
        CashflowSchedule(dividends=(1.0,), discount_rate=-1.0)


# --------------------------------------------------------------- perpetuity

def test_perpetuity_closed_form():
    assert perpetuity_value(5.0, 0.05) == pytest.approx(100.0, rel=1e-15)


def test_perpetuity_times_rate_is_dividend():
    for d, r in ((5.0, 0.05), (1.3, 0.011), (250.0, 0.2)):
        assert perpetuity_value(d, r) * r == pytest.approx(d, rel=1e-15)


def test_perpetuity_agrees_with_truncated_sum():
    d, r = 5.0, 0.05
    truncated = present_value(CashflowSchedule((d,) * 2000, 0.0, r))
    assert perpetuity_value(d, r) == pytest.approx(truncated, rel=1e-6)


def test_perpetuity_divergence():
    with pytest.raises(DivergenceError):
        perpetuity_value(5.0, 0.0)
    with pytest.raises(DivergenceError):
        perpetuity_value(5.0, -0.01)
    with pytest.raises(ParameterError):
        perpetuity_value(0.0, 0.05)


# --------------------------------------------------------------------- capm

def test_capm_beta_cases():
    unit = CapmInputs(sigma_i=0.2, sigma_m=0.2, rho_im=1.0)
    assert capm_beta(unit) == 1.0
    zero = CapmInputs(sigma_i=0.2, sigma_m=0.2, rho_im=0.0)
    assert capm_beta(zero) == 0.0
    mixed = CapmInputs(sigma_i=0.3, sigma_m=0.2, rho_im=0.5)
    assert capm_beta(mixed) == pytest.approx(0.75, rel=1e-15)


def test_capm_expected_return_cases():
    c = CapmInputs(sigma_i=0.3, sigma_m=0.2, rho_im=0.5,
                   risk_free=0.03, expected_market=0.08)
    assert capm_expected_return(0.0, c) == pytest.approx(0.03, rel=1e-15)
    assert capm_expected_return(1.0, c) == pytest.approx(0.08, rel=1e-15)
    assert capm_expected_return(1.2, c) == pytest.approx(0.09, rel=1e-12)


def test_capm_expected_return_affine_in_beta():
    c = CapmInputs(sigma_i=0.3, sigma_m=0.2, rho_im=0.5,
                   risk_free=0.02, expected_market=0.10)
    betas = np.linspace(-1.0, 3.0, 9)
    values = [capm_expected_return(b, c) for b in betas]
    slopes = np.diff(values) / np.diff(betas)
    assert np.max(np.abs(slopes - 0.08)) < 1e-12


def test_capm_validation():
    with pytest.raises(ParameterError):
        CapmInputs(sigma_i=0.0, sigma_m=0.2, rho_im=0.5)
    with pytest.raises(ParameterError):
        CapmInputs(sigma_i=0.2, sigma_m=0.2, rho_im=1.5)


# ----------------------------------------------------------------- ia curve

def test_ia_inflation_cases():
    at_natural = IaCurveInputs(core_inflation=0.02, lambda_=0.5, output=1.0, natural_output=1.0)
    assert ia_inflation(at_natural) == pytest.approx(0.02, rel=1e-15)
    gap = IaCurveInputs(core_inflation=0.02, lambda_=0.5, output=1.01, natural_output=1.0)
    assert ia_inflation(gap) == pytest.approx(0.025, rel=1e-12)
    double = IaCurveInputs(core_inflation=0.02, lambda_=1.0, output=1.01, natural_output=1.0)
    assert (ia_inflation(double) - 0.02) == pytest.approx(2 * (ia_inflation(gap) - 0.02), rel=1e-12)


def test_ia_validation():
    with pytest.raises(ParameterError):
        IaCurveInputs(core_inflation=0.02, lambda_=0.0, output=1.0, natural_output=1.0)


# ------------------------------------------------------------- dS/dq formula

def test_fx_sensitivity_hand_value():
    p = IsLmIaPartials(phi_s=0.3, phi_y=0.5, phi_q=0.2, l_s=0.5, l_y=1.0)
    assert stock_price_fx_sensitivity(p) == pytest.approx(-0.363636, abs=1e-6)
    assert stock_price_fx_sensitivity(p) == pytest.approx(-0.2 / 0.55, rel=1e-12)


def test_fx_sensitivity_sign_sweep_all_negative():
    values = fx_sensitivity_sign_sweep(1000, seed=2024)
    assert values.shape == (1000,)
    assert np.all(values < 0.0)


def test_fx_sensitivity_continuity_in_money_demand_slope():
    values = []
    for l_s in np.linspace(0.1, 2.0, 50):
        p = IsLmIaPartials(phi_s=0.4, phi_y=0.6, phi_q=0.3, l_s=float(l_s), l_y=1.2)
        values.append(stock_price_fx_sensitivity(p))
    diffs = np.abs(np.diff(values))
    assert np.max(diffs) < 0.05  # smooth away from the singularity
    assert all(v < 0 for v in values)


def test_fx_sensitivity_singularity():
    # l_s * (1 - phi_y) + l_y * phi_s = 0 at phi_y > 1
    p = IsLmIaPartials(phi_s=0.5, phi_y=2.0, phi_q=0.3, l_s=1.0, l_y=2.0)
    with pytest.raises(SingularityError) as err:
        stock_price_fx_sensitivity(p)
    assert err.value.denominator == pytest.approx(0.0, abs=1e-12)


def test_islmia_partials_validation():
    with pytest.raises(ParameterError):
        IsLmIaPartials(phi_s=-0.1, phi_y=0.5, phi_q=0.2, l_s=0.5, l_y=1.0)
    # l_s may be negative
    p = IsLmIaPartials(phi_s=0.3, phi_y=0.5, phi_q=0.2, l_s=-0.5, l_y=1.0)
    assert stock_price_fx_sensitivity(p) != 0.0
