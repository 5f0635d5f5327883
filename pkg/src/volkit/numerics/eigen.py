"""Symmetric eigendecomposition via cyclic Jacobi rotations.

The panels this library works with are small (rarely more than ~20 columns),
so a plain cyclic Jacobi sweep is plenty fast, trivially portable, and gives
near machine-precision orthogonality of the eigenvectors, which the PCA
identities downstream rely on.
"""

from dataclasses import dataclass

import numpy as np

from ..errors import DimensionError, NumericalError

_SYMMETRY_TOL = 1e-10
_MAX_SWEEPS = 100


@dataclass(frozen=True)
class EigenDecomposition:
    """Full spectrum of a symmetric matrix.

    eigenvalues are sorted in descending order; ``eigenvectors[:, i]`` is the
    unit-norm eigenvector belonging to ``eigenvalues[i]``.  No sign convention
    is imposed here; callers that need a deterministic sign fix one themselves.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def sym_eigen(m) -> EigenDecomposition:
    """Diagonalize a symmetric matrix.

    Parameters
    ----------
    m : array_like, shape (n, n)
        Symmetric matrix with finite entries.

    Raises
    ------
    DimensionError
        If ``m`` is not square or not symmetric within 1e-10.
    NumericalError
        If the Jacobi sweeps do not converge (practically unreachable for
        symmetric input of sane magnitude).
    """
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] < 1:
        raise DimensionError("matrix must have at least one row")
    if not np.all(np.isfinite(a)):
        raise DimensionError("matrix contains non-finite entries")
    scale = max(1.0, float(np.max(np.abs(a))))
    if float(np.max(np.abs(a - a.T))) > _SYMMETRY_TOL * scale:
        raise DimensionError("matrix is not symmetric within 1e-10")
    a = 0.5 * (a + a.T)

    n = a.shape[0]
    v = np.eye(n)
    if n == 1:
        return EigenDecomposition(a[0, :1].copy(), v)

    for _ in range(_MAX_SWEEPS):
        off = np.sqrt(np.sum(np.tril(a, -1) ** 2))
        if off <= 1e-15 * scale * n:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-18 * scale:
                    continue
                theta = 0.5 * (a[q, q] - a[p, p]) / apq
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta == 0.0:
                    t = 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                # rotate rows/columns p and q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                vec_p = v[:, p].copy()
                vec_q = v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q
    else:
        raise NumericalError(f"Jacobi eigensolver did not converge for a {n}x{n} matrix")

    eigenvalues = np.diag(a).copy()
    order = np.argsort(-eigenvalues, kind="stable")
    return EigenDecomposition(eigenvalues[order], v[:, order])
