"""Date-indexed daily series and its elementary transforms.

A :class:`TradingSeries` is the atom of ingestion: strictly increasing
calendar dates with one finite value each.  Instances are value-like; the
backing arrays are made read-only so a series can be shared freely.
"""

import datetime as _dt
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DegenerateInputError,
    DimensionError,
    DomainError,
    InsufficientDataError,
    ParameterError,
)


def _as_dates(dates) -> np.ndarray:
    arr = np.asarray(dates, dtype="datetime64[D]")
    if arr.ndim != 1:
        raise DimensionError("dates must be one-dimensional")
    return arr


@dataclass(frozen=True)
class TradingSeries:
    """Daily observations on a trading calendar."""

    dates: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        dates = _as_dates(self.dates)
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 1:
            raise DimensionError("values must be one-dimensional")
        if len(dates) != len(values):
            raise DimensionError(
                f"{len(dates)} dates but {len(values)} values"
            )
        if len(dates) < 1:
            raise InsufficientDataError("a series needs at least one observation")
        if len(dates) > 1 and not np.all(dates[1:] > dates[:-1]):
            raise DomainError("dates must be strictly increasing with no duplicates")
        if not np.all(np.isfinite(values)):
            bad = dates[~np.isfinite(values)][0]
            raise DomainError(f"non-finite value at {bad}", date=str(bad))
        dates = dates.copy()
        values = values.copy()
        dates.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "dates", dates)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return len(self.values)

    @classmethod
    def from_pairs(cls, pairs) -> "TradingSeries":
        """Build from an iterable of (date, value) pairs."""
        pairs = list(pairs)
        return cls([d for d, _ in pairs], [v for _, v in pairs])


@dataclass(frozen=True)
class DescriptiveStats:
    """Moment summary of one variable: N, mean, SD, skewness, excess kurtosis,
    min, max.  ``kurtosis`` (raw, = excess + 3) is derived for display."""

    n: int
    mean: float
    sd: float
    skewness: float
    kurtosis_excess: float
    min: float
    max: float
    kurtosis: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "kurtosis", self.kurtosis_excess + 3.0)


def log_returns(prices: TradingSeries) -> TradingSeries:
    """Log returns ln(P_t) - ln(P_{t-1}), dated at the later observation.

    Returns are kept as raw log differences; any x100 presentation scaling is
    applied only when formatting reports.
    """
    if len(prices) < 2:
        raise InsufficientDataError("log returns need at least two prices")
    nonpos = prices.values <= 0.0
    if np.any(nonpos):
        bad = prices.dates[nonpos][0]
        raise DomainError(f"non-positive price at {bad}", date=str(bad))
    logs = np.log(prices.values)
    return TradingSeries(prices.dates[1:], logs[1:] - logs[:-1])


def first_difference(s: TradingSeries) -> TradingSeries:
    """First differences x_t - x_{t-1}, dated at the later observation."""
    if len(s) < 2:
        raise InsufficientDataError("first difference needs at least two observations")
    return TradingSeries(s.dates[1:], s.values[1:] - s.values[:-1])


def lag(s: TradingSeries, k: int) -> TradingSeries:
    """Lag a series by ``k`` observations.

    The value dated t is the original value k observations earlier; the first
    k dates are dropped so the result aligns against the original calendar.
    """
    if k < 1:
        raise ParameterError(f"lag order must be >= 1, got {k}")
    if k >= len(s):
        raise InsufficientDataError(
            f"cannot lag a series of length {len(s)} by {k}"
        )
    return TradingSeries(s.dates[k:], s.values[:-k])


def describe(s: TradingSeries) -> DescriptiveStats:
    """Descriptive statistics with the n-1 standard deviation and
    sample-adjusted skewness / excess kurtosis.

    Needs at least 4 observations (kurtosis); a zero-variance series has no
    defined skewness or kurtosis and is rejected.
    """
    v = s.values
    n = len(v)
    if n < 2:
        raise InsufficientDataError("standard deviation needs at least 2 observations")
    if n < 3:
        raise InsufficientDataError("skewness needs at least 3 observations")
    if n < 4:
        raise InsufficientDataError("kurtosis needs at least 4 observations")

    mean = float(v.mean())
    dev = v - mean
    m2 = float(np.mean(dev**2))
    sd = float(np.sqrt(np.sum(dev**2) / (n - 1)))
    if m2 == 0.0:
        raise DegenerateInputError(
            "zero variance: skewness and kurtosis are undefined"
        )
    m3 = float(np.mean(dev**3))
    m4 = float(np.mean(dev**4))
    g1 = m3 / m2**1.5
    g2 = m4 / m2**2 - 3.0
    skew = g1 * np.sqrt(n * (n - 1)) / (n - 2)
    kurt_excess = ((n + 1) * g2 + 6.0) * (n - 1) / ((n - 2) * (n - 3))
    return DescriptiveStats(
        n=n,
        mean=mean,
        sd=sd,
        skewness=float(skew),
        kurtosis_excess=float(kurt_excess),
        min=float(v.min()),
        max=float(v.max()),
    )


def cumulative_sum(s: TradingSeries, anchor: float) -> TradingSeries:
    """Inverse of :func:`first_difference`: rebuild levels from differences,
    prepending nothing (the anchor is the level one step before the first
    difference, so the output shares the difference calendar)."""
    return TradingSeries(s.dates, anchor + np.cumsum(s.values))


def month_key(date: np.datetime64) -> tuple:
    """(year, month) of a day-resolution date."""
    d = date.astype("datetime64[D]").astype(_dt.date)
    return (d.year, d.month)


def month_end(year: int, month: int) -> np.datetime64:
    """Last calendar day of a month."""
    if month == 12:
        nxt = _dt.date(year + 1, 1, 1)
    else:
        nxt = _dt.date(year, month + 1, 1)
    return np.datetime64(nxt - _dt.timedelta(days=1), "D")
