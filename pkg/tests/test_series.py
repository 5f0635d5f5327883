"""TradingSeries transforms and descriptive statistics."""

import math

import numpy as np
import pytest

from volkit.errors import (
    DegenerateInputError,
    DomainError,
    InsufficientDataError,
    ParameterError,
)
from volkit.series import (
    TradingSeries,
    cumulative_sum,
    describe,
    first_difference,
    lag,
    log_returns,
)


def _ts(values, start="2020-01-01"):
    dates = np.datetime64(start, "D") + np.arange(len(values))
    return TradingSeries(dates, values)


# ------------------------------------------------------------ construction

def test_series_rejects_unsorted_and_duplicate_dates():
    with pytest.raises(DomainError):
        TradingSeries(["2020-01-02", "2020-01-01"], [1.0, 2.0])
    with pytest.raises(DomainError):
        TradingSeries(["2020-01-01", "2020-01-01"], [1.0, 2.0])


def test_series_rejects_non_finite_values():
    with pytest.raises(DomainError) as err:
        _ts([1.0, np.inf, 2.0])
    assert "2020-01-02" in str(err.value)


def test_series_is_read_only():
    s = _ts([1.0, 2.0])
    with pytest.raises(ValueError):
        s.values[0] = 9.0


# ------------------------------------------------------------- log_returns

def test_log_returns_flat_prices():
    r = log_returns(_ts([100.0, 100.0]))
    assert len(r) == 1
    assert r.values[0] == 0.0
    assert str(r.dates[0]) == "2020-01-02"


def test_log_returns_ten_percent():
    r = log_returns(_ts([100.0, 110.0]))
    assert r.values[0] == pytest.approx(0.0953102, abs=1e-7)
    assert r.values[0] == pytest.approx(math.log(1.1), rel=1e-15)


def test_log_returns_nonpositive_price_names_date():
    with pytest.raises(DomainError) as err:
        log_returns(_ts([100.0, 0.0, 50.0]))
    assert err.value.date == "2020-01-02"


def test_log_returns_scale_invariance():
    rng = np.random.default_rng(1)
    prices = np.exp(rng.standard_normal(50).cumsum() * 0.01) * 100.0
    base = log_returns(_ts(prices))
    scaled = log_returns(_ts(17.3 * prices))
    assert np.max(np.abs(base.values - scaled.values)) < 1e-12


def test_log_returns_needs_two_prices():
    with pytest.raises(InsufficientDataError):
        log_returns(_ts([100.0]))


# -------------------------------------------------------- first_difference

def test_first_difference_cases():
    assert np.all(first_difference(_ts([5.0, 5.0, 5.0])).values == 0.0)
    d = first_difference(_ts([1.0, 3.0, 6.0]))
    assert list(d.values) == [2.0, 3.0]
    with pytest.raises(InsufficientDataError):
        first_difference(_ts([1.0]))


def test_first_difference_inverts_cumulative_sum():
    rng = np.random.default_rng(2)
    noise = rng.standard_normal(200)
    walk = _ts(np.concatenate([[0.0], np.cumsum(noise)]))
    recovered = first_difference(walk)
    assert np.max(np.abs(recovered.values - noise)) < 1e-12
    rebuilt = cumulative_sum(recovered, anchor=walk.values[0])
    assert np.max(np.abs(rebuilt.values - walk.values[1:])) < 1e-12


# ---------------------------------------------------------------------- lag

def test_lag_alignment():
    s = _ts([10.0, 20.0, 30.0])
    lagged = lag(s, 1)
    assert list(lagged.values) == [10.0, 20.0]
    assert str(lagged.dates[0]) == "2020-01-02"


def test_lag_parameter_and_length_errors():
    s = _ts([1.0, 2.0, 3.0])
    with pytest.raises(ParameterError):
        lag(s, 0)
    with pytest.raises(InsufficientDataError):
        lag(s, 3)


def test_lag_composition():
    s = _ts(np.arange(12.0) ** 2)
    once_twice = lag(lag(s, 1), 1)
    direct = lag(s, 2)
    assert np.array_equal(once_twice.dates, direct.dates)
    assert np.array_equal(once_twice.values, direct.values)


# ----------------------------------------------------------------- describe

def _brute_force_stats(values):
    """Two-pass moment oracle written without numpy reductions."""
    n = len(values)
    mean = sum(values) / n
    m2 = sum((v - mean) ** 2 for v in values) / n
    m3 = sum((v - mean) ** 3 for v in values) / n
    m4 = sum((v - mean) ** 4 for v in values) / n
    sd = math.sqrt(sum((v - mean) ** 2 for v in values) / (n - 1))
    g1 = m3 / m2**1.5
    g2 = m4 / m2**2 - 3.0
    skew = g1 * math.sqrt(n * (n - 1)) / (n - 2)
    kurt = ((n + 1) * g2 + 6.0) * (n - 1) / ((n - 2) * (n - 3))
    return mean, sd, skew, kurt


def test_describe_hand_example():
    st = describe(_ts([1.0, 2.0, 3.0, 4.0, 5.0]))
    assert st.mean == 3.0
    assert st.sd == pytest.approx(1.5811, abs=5e-5)
    assert st.min == 1.0 and st.max == 5.0
    assert st.n == 5


def test_describe_symmetric_series_has_zero_skewness():
    st = describe(_ts([-2.0, 0.0, 2.0, 0.0]))
    assert st.skewness == pytest.approx(0.0, abs=1e-12)


def test_describe_matches_brute_force_oracle():
    rng = np.random.default_rng(9)
    for _ in range(20):
        values = rng.standard_normal(rng.integers(10, 200)) * rng.uniform(0.1, 5.0)
        st = describe(_ts(values))
        mean, sd, skew, kurt = _brute_force_stats(list(values))
        assert st.mean == pytest.approx(mean, abs=1e-10)
        assert st.sd == pytest.approx(sd, abs=1e-10)
        assert st.skewness == pytest.approx(skew, abs=1e-10)
        assert st.kurtosis_excess == pytest.approx(kurt, abs=1e-10)
        assert st.kurtosis == pytest.approx(kurt + 3.0, abs=1e-10)


def test_describe_affine_invariance():
    rng = np.random.default_rng(10)
    base = rng.standard_normal(100)
    st0 = describe(_ts(base))
    st_pos = describe(_ts(2.5 * base + 7.0))
    st_neg = describe(_ts(-3.0 * base + 1.0))
    assert st_pos.skewness == pytest.approx(st0.skewness, abs=1e-9)
    assert st_pos.kurtosis_excess == pytest.approx(st0.kurtosis_excess, abs=1e-9)
    assert st_neg.skewness == pytest.approx(-st0.skewness, abs=1e-9)
    assert st_neg.kurtosis_excess == pytest.approx(st0.kurtosis_excess, abs=1e-9)


def test_describe_permutation_invariance():
    rng = np.random.default_rng(12)
    values = rng.standard_normal(60)
    st0 = describe(_ts(values))
    st1 = describe(_ts(values[rng.permutation(60)]))
    assert st1.mean == pytest.approx(st0.mean, abs=1e-12)
    assert st1.sd == pytest.approx(st0.sd, abs=1e-12)
    assert st1.skewness == pytest.approx(st0.skewness, abs=1e-10)


def test_describe_errors():
    with pytest.raises(InsufficientDataError):
        describe(_ts([1.0]))
    with pytest.raises(InsufficientDataError):
        describe(_ts([1.0, 2.0, 3.0]))
    with pytest.raises(DegenerateInputError):
        describe(_ts([4.0, 4.0, 4.0, 4.0]))
