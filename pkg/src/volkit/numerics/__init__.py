"""Numerical kernel: eigendecomposition, least squares, simplex optimization,
and distribution CDFs."""

from .distributions import (
    beta_inc,
    chi2_cdf,
    dist_cdf,
    f_cdf,
    gamma_p,
    normal_cdf,
    t_cdf,
)
from .eigen import EigenDecomposition, sym_eigen
from .ols import OlsFit, ols_solve
from .optimize import MinimizeResult, minimize

__all__ = [
    "EigenDecomposition",
    "MinimizeResult",
    "OlsFit",
    "beta_inc",
    "chi2_cdf",
    "dist_cdf",
    "f_cdf",
    "gamma_p",
    "normal_cdf",
    "minimize",
    "ols_solve",
    "sym_eigen",
    "t_cdf",
]
