"""Granger causality and White heteroskedasticity tests."""

import numpy as np
import pytest
from scipy import stats

from volkit.errors import AlignmentError, InsufficientDataError, ParameterError
from volkit.series import TradingSeries
from volkit.stattests import (
    decide_homoskedastic,
    granger_p_value,
    granger_test,
    white_test,
)


def _ts(values, start="2020-01-01"):
    dates = np.datetime64(start, "D") + np.arange(len(values))
    return TradingSeries(dates, values)


def _causal_pair(n, seed, strength=0.5, lags=1):
    rng = np.random.default_rng(seed)
    x = rng.standard_normal(n)
    y = np.zeros(n)
    for t in range(lags, n):
        y[t] = strength * x[t - lags] + rng.standard_normal()
    return _ts(x), _ts(y)


# ------------------------------------------------------------------ granger

def test_granger_reference_fixture_p_value():
    # published F statistic with two lags on 1347 usable observations
    p = granger_p_value(5.3123, lags=2, df_denominator=1342)
    assert p == pytest.approx(0.0051, abs=0.001)
    assert p < 0.05


def test_granger_p_value_matches_scipy():
    for f, lags, df2 in ((2.3602, 2, 1342), (1.5173, 2, 1342), (0.5, 1, 100)):
        assert granger_p_value(f, lags, df2) == pytest.approx(
            stats.f.sf(f, lags, df2), abs=1e-10
        )


def test_granger_detects_true_direction():
    cause, effect = _causal_pair(800, seed=0)
    forward = granger_test(cause, effect, lags=1, cause_name="X", effect_name="Y")
    backward = granger_test(effect, cause, lags=1, cause_name="Y", effect_name="X")
    assert forward.p_value < 0.01
    assert backward.p_value > 0.01
    assert forward.cause == "X" and forward.effect == "Y"


def test_granger_f_nonnegative_on_independent_series():
    rng = np.random.default_rng(1)
    for _ in range(15):
        a = _ts(rng.standard_normal(120))
        b = _ts(rng.standard_normal(120))
        res = granger_test(a, b, lags=2)
        assert res.f_statistic >= 0.0
        assert 0.0 <= res.p_value <= 1.0


def test_granger_uses_stated_degrees_of_freedom():
    cause, effect = _causal_pair(500, seed=2, lags=1)
    res = granger_test(cause, effect, lags=1)
    assert res.nobs == 499
    assert res.df_denominator == 499 - 2 * 1 - 1


def test_granger_errors():
    a = _ts(np.arange(100.0))
    b = _ts(np.arange(100.0), start="2021-01-01")
    with pytest.raises(AlignmentError):
        granger_test(a, b, lags=1)
    short = _ts(np.arange(7.0))
    with pytest.raises(InsufficientDataError):
        granger_test(short, short, lags=1)
    with pytest.raises(ParameterError):
        granger_test(a, a, lags=0)


def test_granger_size_smoke():
    rng = np.random.default_rng(3)
    rejections = 0
    n_reps = 80
    for i in range(n_reps):
        a = _ts(rng.standard_normal(300))
        b = _ts(rng.standard_normal(300))
        rejections += granger_test(a, b, lags=1).p_value < 0.05
    assert rejections <= 12  # ~5% expected


# -------------------------------------------------------------------- white

def test_white_reference_statistics_fail_to_reject():
    assert decide_homoskedastic(0.1784)
    assert decide_homoskedastic(0.3882)
    assert not decide_homoskedastic(0.01)


def test_white_homoskedastic_residuals_pass():
    rng = np.random.default_rng(4)
    x = rng.standard_normal((1000, 2))
    e = rng.standard_normal(1000)
    res = white_test(e, x, cross_terms=True)
    assert res.cross_terms
    assert res.df == 5  # 2 levels + 2 squares + 1 cross product
    assert res.chi2_p_value > 0.05
    assert res.f_p_value > 0.05


def test_white_detects_regressor_driven_variance():
    rng = np.random.default_rng(5)
    x = rng.standard_normal((1000, 2))
    e = rng.standard_normal(1000) * np.sqrt(0.2 + 2.0 * x[:, 0] ** 2)
    res = white_test(e, x)
    assert res.chi2_p_value < 0.01
    assert not decide_homoskedastic(res.chi2_p_value)


def test_white_statistic_forms_are_consistent():
    rng = np.random.default_rng(6)
    x = rng.standard_normal((400, 3))
    e = rng.standard_normal(400)
    res = white_test(e, x)
    assert res.n_r_squared >= 0.0
    assert res.chi2_p_value == pytest.approx(
        stats.chi2.sf(res.n_r_squared, res.df), abs=1e-10
    )
    assert res.df == 3 + 3 + 3


def test_white_scale_invariance():
    rng = np.random.default_rng(7)
    x = rng.standard_normal((300, 2))
    e = rng.standard_normal(300)
    base = white_test(e, x)
    scaled = white_test(1e4 * e, x)
    assert scaled.n_r_squared == pytest.approx(base.n_r_squared, rel=1e-9)
    assert scaled.chi2_p_value == pytest.approx(base.chi2_p_value, abs=1e-9)


def test_white_downgrades_cross_terms_on_rank_deficiency():
    rng = np.random.default_rng(8)
    a = rng.standard_normal(200)
    b = rng.standard_normal(200)
    # third regressor equals a*b, so the cross product a*b duplicates it:
    # the aux design is singular only once cross terms are added
    x = np.column_stack([a, b, a * b])
    e = rng.standard_normal(200)
    with pytest.warns(UserWarning, match="cross terms"):
        res = white_test(e, x, cross_terms=True)
    assert not res.cross_terms
    assert res.df == 6


def test_white_size_smoke():
    rng = np.random.default_rng(9)
    rejections = 0
    for _ in range(80):
        x = rng.standard_normal((300, 2))
        e = rng.standard_normal(300)
        rejections += white_test(e, x).chi2_p_value < 0.05
    assert rejections <= 12
