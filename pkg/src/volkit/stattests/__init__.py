"""Statistical test battery: unit roots, cointegration, causality,
heteroskedasticity, and correlation screening."""

from .adf import (
    NOT_STATIONARY,
    SPEC_CONSTANT,
    SPEC_NONE,
    SPEC_TREND,
    STATIONARY,
    AdfResult,
    adf_test,
    classify,
)
from .correlation import correlation_matrix, multicollinearity_screen
from .granger import GrangerResult, granger_p_value, granger_test
from .johansen import (
    DET_CONSTANT,
    DET_NONE,
    CointegrationResult,
    CointegrationRow,
    johansen_test,
    max_p_value,
    select_rank,
    trace_p_value,
)
from .white import WhiteResult, decide_homoskedastic, white_test

__all__ = [
    "AdfResult",
    "CointegrationResult",
    "CointegrationRow",
    "DET_CONSTANT",
    "DET_NONE",
    "GrangerResult",
    "NOT_STATIONARY",
    "SPEC_CONSTANT",
    "SPEC_NONE",
    "SPEC_TREND",
    "STATIONARY",
    "WhiteResult",
    "adf_test",
    "classify",
    "correlation_matrix",
    "decide_homoskedastic",
    "granger_p_value",
    "granger_test",
    "johansen_test",
    "max_p_value",
    "multicollinearity_screen",
    "select_rank",
    "trace_p_value",
    "white_test",
]
