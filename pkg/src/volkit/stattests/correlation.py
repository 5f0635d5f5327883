"""Pearson correlation matrix and the multicollinearity screen that decides
between direct regression and principal-component regression."""

import numpy as np

from ..errors import DegenerateInputError, ParameterError
from ..ingest import AlignedPanel


def correlation_matrix(panel: AlignedPanel, roles=None) -> np.ndarray:
    """Pearson correlations between panel columns, in the given role order."""
    roles = panel.roles if roles is None else list(roles)
    data = panel.matrix(roles)
    means = data.mean(axis=0)
    dev = data - means
    ss = np.sqrt(np.sum(dev**2, axis=0))
    for j, role in enumerate(roles):
        if ss[j] == 0.0:
            raise DegenerateInputError(f"column {role} is constant; correlation undefined")
    corr = (dev.T @ dev) / np.outer(ss, ss)
    np.fill_diagonal(corr, 1.0)
    return np.clip(corr, -1.0, 1.0)


def multicollinearity_screen(corr: np.ndarray, threshold: float, labels=None) -> list:
    """All off-diagonal pairs with |r| >= threshold.

    An empty list means the variables are weakly enough correlated for a
    direct regression.  ``threshold`` must be in (0, 1]; 1.0 flags only exact
    collinearity, which effectively disables the screen.
    """
    if not (0.0 < threshold <= 1.0):
        raise ParameterError(f"threshold must be in (0, 1], got {threshold}")
    corr = np.asarray(corr, dtype=float)
    k = corr.shape[0]
    if corr.ndim != 2 or corr.shape[1] != k:
        raise ParameterError("correlation matrix must be square")
    if labels is None:
        labels = list(range(k))
    labels = list(labels)
    if len(labels) != k:
        raise ParameterError(f"{len(labels)} labels for a {k}x{k} matrix")
    flagged = []
    for i in range(k):
        for j in range(i + 1, k):
            if abs(corr[i, j]) >= threshold:
                flagged.append((labels[i], labels[j], float(corr[i, j])))
    return flagged
