"""Synthetic dataset generation.

The library's own acceptance data source: deterministic given a seed, written
as the same per-role CSV files the ingestion layer reads.  Three scenarios:

``independent``
    Four unrelated series (prices with i.i.d. log returns, three random
    walks): nothing to find.
``cointegrated``
    The domestic bond yield is a noisy affine function of the exchange rate,
    so the pair shares one stochastic trend.
``paper-like``
    Prices driven by a persistent GARCH(1,1), an exchange-rate random walk,
    a domestic yield built to correlate with the exchange rate at -0.645 in
    sample, and an independent foreign yield.
"""

import os

import numpy as np

from ..errors import ParameterError
from ..ingest import ROLE_CNB, ROLE_FXR, ROLE_PRICE, ROLE_USB
from ..volatility import GarchParams, business_day_calendar, garch_simulate

SCENARIOS = ("independent", "cointegrated", "paper-like")
MIN_OBSERVATIONS = 500
TARGET_FXR_CNB_CORRELATION = -0.645

_FILES = {
    ROLE_PRICE: "sse.csv",
    ROLE_FXR: "fxr.csv",
    ROLE_CNB: "cnb.csv",
    ROLE_USB: "usb.csv",
}


def simulate_dataset(seed: int, n: int, scenario: str, out_dir) -> dict:
    """Write one synthetic dataset and a ready-to-run pipeline config.

    Returns a mapping role -> file path (plus ``"config"``).  Same seed,
    same bytes.
    """
    if scenario not in SCENARIOS:
        raise ParameterError(f"unknown scenario '{scenario}'; expected one of {SCENARIOS}")
    if n < MIN_OBSERVATIONS:
        raise ParameterError(f"n must be >= {MIN_OBSERVATIONS}, got {n}")

    generator = {
        "independent": _independent,
        "cointegrated": _cointegrated,
        "paper-like": _paper_like,
    }[scenario]
    columns = generator(seed, n)
    dates = business_day_calendar(n)

    os.makedirs(out_dir, exist_ok=True)
    written = {}
    for role, filename in _FILES.items():
        path = os.path.join(out_dir, filename)
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write("date,value\n")
            for d, v in zip(dates, columns[role]):
                fh.write(f"{d},{v:.10g}\n")
        written[role] = path

    config_path = os.path.join(out_dir, "dataset.cfg")
    with open(config_path, "w", encoding="utf-8", newline="") as fh:
        fh.write(f"# synthetic dataset: scenario={scenario} seed={seed} n={n}\n")
        fh.write(f"price = {_FILES[ROLE_PRICE]}\n")
        fh.write(f"fxr = {_FILES[ROLE_FXR]}\n")
        fh.write(f"cnb = {_FILES[ROLE_CNB]}\n")
        fh.write(f"usb = {_FILES[ROLE_USB]}\n")
        fh.write("alignment = intersect\n")
        fh.write(f"seed = {seed}\n")
    written["config"] = config_path
    return written


def _rng(seed, stream):
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, stream])))


def _prices_from_garch(seed, n) -> np.ndarray:
    params = GarchParams(mu=2e-4, omega=2.88e-6, alpha=0.08, beta=0.90)
    returns = garch_simulate(params, n - 1, seed=seed)
    levels = 3000.0 * np.exp(np.concatenate([[0.0], np.cumsum(returns.values)]))
    return levels


def _random_walk(rng, n, start, step_sd) -> np.ndarray:
    return start + np.cumsum(rng.standard_normal(n)) * step_sd


def _independent(seed, n):
    rng = _rng(seed, 1)
    prices = 3000.0 * np.exp(np.concatenate([[0.0], np.cumsum(
        2e-4 + 0.012 * rng.standard_normal(n - 1))]))
    return {
        ROLE_PRICE: prices,
        ROLE_FXR: _random_walk(_rng(seed, 2), n, 6.5, 0.004),
        ROLE_CNB: _random_walk(_rng(seed, 3), n, 3.5, 0.015),
        ROLE_USB: _random_walk(_rng(seed, 4), n, 2.5, 0.02),
    }


def _cointegrated(seed, n):
    fxr = _random_walk(_rng(seed, 2), n, 6.5, 0.004)
    noise = _rng(seed, 3).standard_normal(n)
    cnb = 3.5 - 4.0 * (fxr - 6.5) + 0.05 * noise
    return {
        ROLE_PRICE: _prices_from_garch(seed, n),
        ROLE_FXR: fxr,
        ROLE_CNB: cnb,
        ROLE_USB: _random_walk(_rng(seed, 4), n, 2.5, 0.02),
    }


def _paper_like(seed, n):
    fxr = _random_walk(_rng(seed, 2), n, 6.5, 0.004)
    z = (fxr - fxr.mean()) / fxr.std(ddof=1)
    raw = _rng(seed, 3).standard_normal(n)
    # orthogonalize the noise against z in sample so the realized correlation
    # hits the target exactly up to rounding
    resid = raw - z * float(z @ raw) / float(z @ z)
    resid = (resid - resid.mean()) / resid.std(ddof=1)
    rho = TARGET_FXR_CNB_CORRELATION
    core = rho * z + np.sqrt(1.0 - rho * rho) * resid
    cnb = 3.5 + 0.5 * core
    return {
        ROLE_PRICE: _prices_from_garch(seed, n),
        ROLE_FXR: fxr,
        ROLE_CNB: cnb,
        ROLE_USB: _random_walk(_rng(seed, 4), n, 2.5, 0.02),
    }
