"""Standardization and principal component analysis.

PCA runs on the correlation matrix (the covariance of standardized columns),
so the eigenvalues sum to the number of variables.  Loadings are unit-norm
eigenvectors with a deterministic sign (the largest-magnitude entry of each
column is made positive), scores are plain projections of the standardized
data, and a component dominated by a single variable is flagged as a proxy
for it.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInputError, DimensionError, ParameterError
from .ingest import AlignedPanel
from .numerics import sym_eigen

RULE_KAISER = "kaiser"
RULE_CUMULATIVE = "cumulative"
RULE_BOTH = "both"
DEFAULT_TAU = 0.70

PROXY_DOMINANT = 0.9
PROXY_OTHERS = 0.1


@dataclass(frozen=True)
class PcaResult:
    """Eigenstructure of a standardized panel.

    ``loadings[i, j]`` is variable i's weight in component j; columns are
    orthonormal.  ``column_means`` / ``column_sds`` carry the statistics used
    for standardization so new observations can be projected consistently.
    ``proxies[j]`` names the variable component j is a proxy for (loading
    magnitude above 0.9 with every other magnitude below 0.1), or None.
    """

    variables: tuple
    eigenvalues: np.ndarray
    proportions: np.ndarray
    cumulative: np.ndarray
    loadings: np.ndarray
    selected_k: int
    column_means: np.ndarray
    column_sds: np.ndarray
    proxies: tuple


@dataclass(frozen=True)
class ScorePanel:
    """Principal-component score series on the panel calendar."""

    dates: np.ndarray
    scores: dict

    @property
    def labels(self):
        return list(self.scores)

    def matrix(self) -> np.ndarray:
        return np.column_stack(list(self.scores.values()))


def standardize(panel: AlignedPanel, roles=None):
    """Center and scale columns to mean 0, sd 1 (n-1 divisor).

    Returns (standardized panel, means, sds) with means/sds in role order.
    """
    roles = panel.roles if roles is None else list(roles)
    means, sds, cols = [], [], {}
    for role in roles:
        v = panel.column(role)
        mean = float(v.mean())
        sd = float(np.sqrt(np.sum((v - mean) ** 2) / (len(v) - 1))) if len(v) > 1 else 0.0
        if sd == 0.0:
            raise DegenerateInputError(f"column {role} is constant; cannot standardize")
        means.append(mean)
        sds.append(sd)
        cols[role] = (v - mean) / sd
    return AlignedPanel(panel.dates, cols), np.array(means), np.array(sds)


def select_components(eigenvalues, rule: str = RULE_BOTH, tau: float = DEFAULT_TAU) -> int:
    """Number of components to keep.

    ``kaiser`` counts eigenvalues strictly above 1; ``cumulative`` takes the
    smallest k explaining at least ``tau`` of the variance; ``both`` (the
    default) takes the larger of the two.
    """
    ev = np.asarray(eigenvalues, dtype=float)
    if ev.size == 0:
        raise ParameterError("empty eigenvalue vector")
    if np.any(ev < 0.0):
        raise ParameterError("eigenvalues must be non-negative")
    if np.any(np.diff(ev) > 1e-12):
        raise ParameterError("eigenvalues must be sorted in descending order")
    if not (0.0 < tau <= 1.0):
        raise ParameterError(f"tau must be in (0, 1], got {tau}")

    kaiser = int(np.sum(ev > 1.0))
    cum = cumulative_proportions(ev)
    cumulative_k = int(np.searchsorted(cum, tau - 1e-12) + 1)
    cumulative_k = min(cumulative_k, ev.size)

    if rule == RULE_KAISER:
        return kaiser
    if rule == RULE_CUMULATIVE:
        return cumulative_k
    if rule == RULE_BOTH:
        return max(kaiser, cumulative_k)
    raise ParameterError(
        f"unknown rule '{rule}'; expected {RULE_KAISER}, {RULE_CUMULATIVE} or {RULE_BOTH}"
    )


def cumulative_proportions(values) -> np.ndarray:
    """Running share of the total: cumsum(v) / sum(v)."""
    v = np.asarray(values, dtype=float)
    total = v.sum()
    if total <= 0.0:
        raise ParameterError("proportions need a positive total")
    return np.cumsum(v) / total


def pca(standardized: AlignedPanel, roles=None, rule: str = RULE_BOTH,
        tau: float = DEFAULT_TAU, column_means=None, column_sds=None) -> PcaResult:
    """Principal component analysis of a standardized panel.

    The input is expected to hold standardized columns (see
    :func:`standardize`, which also provides ``column_means``/``column_sds``
    to stash in the result).
    """
    roles = standardized.roles if roles is None else list(roles)
    z = standardized.matrix(roles)
    n, p = z.shape
    if p < 2:
        raise ParameterError(f"PCA needs at least 2 columns, got {p}")
    if n <= p:
        raise DegenerateInputError(f"PCA needs more rows ({n}) than columns ({p})")

    corr = z.T @ z / (n - 1)
    decomp = sym_eigen(0.5 * (corr + corr.T))
    eigenvalues = np.maximum(decomp.eigenvalues, 0.0)
    loadings = _fix_signs(decomp.eigenvectors)
    proportions = eigenvalues / eigenvalues.sum()
    cumulative = cumulative_proportions(eigenvalues)
    k = select_components(eigenvalues, rule=rule, tau=tau)

    means = np.zeros(p) if column_means is None else np.asarray(column_means, float)
    sds = np.ones(p) if column_sds is None else np.asarray(column_sds, float)
    if means.shape != (p,) or sds.shape != (p,):
        raise DimensionError("column_means/column_sds must match the column count")

    return PcaResult(
        variables=tuple(roles),
        eigenvalues=eigenvalues,
        proportions=proportions,
        cumulative=cumulative,
        loadings=loadings,
        selected_k=k,
        column_means=means,
        column_sds=sds,
        proxies=tuple(_proxy_for(loadings[:, j], roles) for j in range(p)),
    )


def scores(result: PcaResult, standardized: AlignedPanel, n_components=None) -> ScorePanel:
    """Project the standardized panel onto the loading columns.

    Score column j is ``Z @ loadings[:, j]``; with all components the scores
    reproduce the data exactly (orthogonal reconstruction).  Labels are F1,
    F2, ... in eigenvalue order.
    """
    z = standardized.matrix(list(result.variables))
    if z.shape[1] != result.loadings.shape[0]:
        raise DimensionError(
            f"panel has {z.shape[1]} columns but loadings expect "
            f"{result.loadings.shape[0]}"
        )
    k = result.selected_k if n_components is None else int(n_components)
    if not 1 <= k <= result.loadings.shape[1]:
        raise ParameterError(f"n_components must be in 1..{result.loadings.shape[1]}")
    proj = z @ result.loadings[:, :k]
    return ScorePanel(
        dates=standardized.dates,
        scores={f"F{j + 1}": proj[:, j] for j in range(k)},
    )


def _fix_signs(vectors: np.ndarray) -> np.ndarray:
    """Flip each column so its largest-magnitude entry is positive."""
    out = vectors.copy()
    for j in range(out.shape[1]):
        idx = int(np.argmax(np.abs(out[:, j])))
        if out[idx, j] < 0.0:
            out[:, j] = -out[:, j]
    return out


def _proxy_for(column, roles):
    magnitudes = np.abs(column)
    idx = int(np.argmax(magnitudes))
    others = np.delete(magnitudes, idx)
    if magnitudes[idx] > PROXY_DOMINANT and np.all(others < PROXY_OTHERS):
        return roles[idx]
    return None
