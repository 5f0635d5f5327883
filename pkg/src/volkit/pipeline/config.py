"""Pipeline configuration: one flat key = value file.

Dataset keys (see :mod:`volkit.ingest`) name the per-role CSV files; the
remaining keys steer the analysis stages.  Unknown keys are rejected so a
typo cannot silently fall back to a default.
"""

import hashlib
from dataclasses import dataclass, field

from ..errors import ConfigurationError
from ..ingest import (
    DEFAULT_MAX_FFILL_GAP_DAYS,
    dataset_from_config,
    parse_flat_config,
)

_DATASET_KEYS = {
    "price", "yield-source-price", "fxr", "cnb", "usb",
    "alignment", "max_gap_days",
}
_ANALYSIS_DEFAULTS = {
    "adf_spec": "constant+trend",
    "adf_lags": "auto",
    "difference": "",
    "corr_threshold": "0.6",
    "pca_rule": "both",
    "pca_tau": "0.70",
    "regression_trend": "false",
    "johansen_lags": "1",
    "johansen_det": "constant",
    "granger_lags": "1",
    "white_cross_terms": "true",
    "seed": "0",
}


@dataclass(frozen=True)
class PipelineConfig:
    """Everything one end-to-end run needs."""

    series_specs: tuple
    alignment: str = "intersect"
    max_gap_days: int = DEFAULT_MAX_FFILL_GAP_DAYS
    adf_spec: str = "constant+trend"
    adf_lags: int | None = None          # None = AIC selection
    difference_roles: tuple = ()         # columns replaced by first differences
    corr_threshold: float = 0.6
    pca_rule: str = "both"
    pca_tau: float = 0.70
    regression_trend: bool = False
    johansen_lags: int = 1
    johansen_det: str = "constant"
    granger_lags: int = 1
    white_cross_terms: bool = True
    seed: int = 0
    source_text: str = field(default="", repr=False)

    @property
    def config_hash(self) -> str:
        """Stable fingerprint of the raw configuration text."""
        return hashlib.sha256(self.source_text.encode("utf-8")).hexdigest()[:16]


def load_pipeline_config(path, base_dir=None) -> PipelineConfig:
    """Read and validate a pipeline configuration file."""
    import os

    entries = parse_flat_config(path)
    if base_dir is None:
        base_dir = os.path.dirname(os.path.abspath(path))

    unknown = set()
    for key in entries:
        bare = key.split(".")[0]
        if bare not in _DATASET_KEYS and key not in _ANALYSIS_DEFAULTS:
            unknown.add(key)
    if unknown:
        raise ConfigurationError(f"unknown config keys: {sorted(unknown)}")

    specs, alignment, max_gap = dataset_from_config(entries, base_dir=base_dir)
    get = lambda key: entries.get(key, _ANALYSIS_DEFAULTS[key])

    adf_lags_raw = get("adf_lags")
    adf_lags = None if adf_lags_raw == "auto" else _int(adf_lags_raw, "adf_lags")
    difference = tuple(r for r in get("difference").replace(",", " ").split() if r)

    with open(path, "r", encoding="utf-8") as fh:
        source_text = fh.read()

    return PipelineConfig(
        series_specs=tuple(specs),
        alignment=alignment,
        max_gap_days=max_gap,
        adf_spec=_choice(get("adf_spec"), ("none", "constant", "constant+trend"), "adf_spec"),
        adf_lags=adf_lags,
        difference_roles=difference,
        corr_threshold=_bounded_float(get("corr_threshold"), "corr_threshold"),
        pca_rule=_choice(get("pca_rule"), ("kaiser", "cumulative", "both"), "pca_rule"),
        pca_tau=_bounded_float(get("pca_tau"), "pca_tau"),
        regression_trend=_bool(get("regression_trend"), "regression_trend"),
        johansen_lags=_int(get("johansen_lags"), "johansen_lags"),
        johansen_det=_choice(get("johansen_det"), ("none", "constant"), "johansen_det"),
        granger_lags=_int(get("granger_lags"), "granger_lags"),
        white_cross_terms=_bool(get("white_cross_terms"), "white_cross_terms"),
        seed=_int(get("seed"), "seed"),
        source_text=source_text,
    )


def _int(raw, key):
    try:
        return int(raw)
    except ValueError:
        raise ConfigurationError(f"{key} must be an integer, got '{raw}'")


def _bounded_float(raw, key):
    try:
        value = float(raw)
    except ValueError:
        raise ConfigurationError(f"{key} must be a number, got '{raw}'")
    if not 0.0 < value <= 1.0:
        raise ConfigurationError(f"{key} must be in (0, 1], got {value}")
    return value


def _bool(raw, key):
    lowered = raw.strip().lower()
    if lowered in ("true", "yes", "1"):
        return True
    if lowered in ("false", "no", "0"):
        return False
    raise ConfigurationError(f"{key} must be true or false, got '{raw}'")


def _choice(raw, allowed, key):
    if raw not in allowed:
        raise ConfigurationError(f"{key} must be one of {allowed}, got '{raw}'")
    return raw
