"""Correlation matrix and the multicollinearity screen."""

import numpy as np
import pytest

from volkit.errors import DegenerateInputError, ParameterError
from volkit.ingest import AlignedPanel
from volkit.numerics import sym_eigen
from volkit.stattests import correlation_matrix, multicollinearity_screen

# Published 3-variable correlation matrix used as a decision fixture.
REFERENCE_CORR = np.array([
    [1.000, -0.645, 0.263],
    [-0.645, 1.000, 0.005],
    [0.263, 0.005, 1.000],
])
REFERENCE_LABELS = ["FXR", "CNB", "USB"]


def _panel(columns):
    n = len(next(iter(columns.values())))
    dates = np.datetime64("2020-01-01", "D") + np.arange(n)
    return AlignedPanel(dates, columns)


def test_self_and_anti_correlation():
    rng = np.random.default_rng(0)
    x = rng.standard_normal(100)
    panel = _panel({"A": x, "B": -x, "C": rng.standard_normal(100)})
    corr = correlation_matrix(panel)
    assert corr[0, 0] == 1.0
    assert corr[0, 1] == pytest.approx(-1.0, abs=1e-12)


def test_correlation_matches_brute_force_oracle():
    rng = np.random.default_rng(1)
    panel = _panel({
        "A": rng.standard_normal(250),
        "B": rng.standard_normal(250),
        "C": rng.standard_normal(250),
    })
    corr = correlation_matrix(panel)
    data = panel.matrix()
    for i in range(3):
        for j in range(3):
            xi, xj = data[:, i], data[:, j]
            cov = np.mean((xi - xi.mean()) * (xj - xj.mean()))
            expected = cov / (xi.std() * xj.std())
            assert corr[i, j] == pytest.approx(expected, abs=1e-12)
    assert np.max(np.abs(corr - corr.T)) == 0.0


def test_correlation_matrix_positive_semidefinite():
    rng = np.random.default_rng(2)
    panel = _panel({f"V{i}": rng.standard_normal(80) for i in range(6)})
    corr = correlation_matrix(panel)
    eigenvalues = sym_eigen(corr).eigenvalues
    assert np.min(eigenvalues) >= -1e-10


def test_correlation_constant_column_rejected():
    panel = _panel({"A": np.ones(50), "B": np.arange(50.0)})
    with pytest.raises(DegenerateInputError, match="A"):
        correlation_matrix(panel)


def test_screen_reference_matrix_at_published_thresholds():
    flagged = multicollinearity_screen(REFERENCE_CORR, 0.6, REFERENCE_LABELS)
    assert flagged == [("FXR", "CNB", pytest.approx(-0.645))]
    flagged_low = multicollinearity_screen(REFERENCE_CORR, 0.2, REFERENCE_LABELS)
    assert [(a, b) for a, b, _ in flagged_low] == [("FXR", "CNB"), ("FXR", "USB")]


def test_screen_identity_matrix_empty():
    assert multicollinearity_screen(np.eye(4), 0.2) == []


def test_screen_threshold_validation():
    with pytest.raises(ParameterError):
        multicollinearity_screen(np.eye(2), 0.0)
    with pytest.raises(ParameterError):
        multicollinearity_screen(np.eye(2), 1.5)
    # 1.0 is allowed and flags only exact collinearity
    corr = np.array([[1.0, 1.0], [1.0, 1.0]])
    assert multicollinearity_screen(corr, 1.0, ["A", "B"]) == [("A", "B", 1.0)]
    assert multicollinearity_screen(REFERENCE_CORR, 1.0, REFERENCE_LABELS) == []
