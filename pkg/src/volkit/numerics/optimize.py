"""Nelder-Mead simplex minimization (Nelder & Mead, 1965).

Derivative-free, which is all the GARCH likelihood needs once its box
constraints are mapped away by a smooth reparameterization.  The best point
seen so far is tracked explicitly, so the result can never be worse than the
starting point and a non-convergent run still reports the best point found.
"""

from dataclasses import dataclass

import numpy as np

from ..errors import DomainError

_REFLECT = 1.0
_EXPAND = 2.0
_CONTRACT = 0.5
_SHRINK = 0.5


@dataclass(frozen=True)
class MinimizeResult:
    """Outcome of a simplex minimization."""

    x: np.ndarray
    fun: float
    iterations: int
    n_evaluations: int
    converged: bool


def minimize(objective, start, tolerance: float = 1e-8, max_iterations: int = 2000,
             initial_step=None) -> MinimizeResult:
    """Minimize ``objective`` from ``start``.

    Convergence is declared when both the simplex diameter and the spread of
    the vertex values fall below ``tolerance``.  When the iteration budget is
    exhausted the best point seen so far is returned with ``converged=False``.

    Raises
    ------
    DomainError
        If the objective is not finite at the starting point.
    """
    x0 = np.asarray(start, dtype=float).ravel()
    n = x0.size
    evals = 0

    def f(x):
        nonlocal evals
        evals += 1
        val = float(objective(x))
        return val if np.isfinite(val) else np.inf

    f0 = f(x0)
    if not np.isfinite(f0):
        raise DomainError("objective is not finite at the starting point")

    best_x = x0.copy()
    best_f = f0

    def record(x, val):
        nonlocal best_x, best_f
        if val < best_f:
            best_f = val
            best_x = x.copy()

    if initial_step is None:
        step = np.where(x0 != 0.0, 0.05 * np.abs(x0), 0.00025)
    else:
        step = np.broadcast_to(np.asarray(initial_step, dtype=float), (n,)).copy()

    simplex = np.vstack([x0] + [x0 + step[i] * _unit(n, i) for i in range(n)])
    values = np.array([f0] + [f(simplex[i + 1]) for i in range(n)])
    for i in range(n + 1):
        record(simplex[i], values[i])

    converged = False
    iteration = 0
    for iteration in range(1, max_iterations + 1):
        order = np.argsort(values, kind="stable")
        simplex = simplex[order]
        values = values[order]

        diameter = float(np.max(np.abs(simplex[1:] - simplex[0])))
        spread = float(values[-1] - values[0])
        if diameter <= tolerance and spread <= tolerance:
            converged = True
            break

        centroid = simplex[:-1].mean(axis=0)
        reflected = centroid + _REFLECT * (centroid - simplex[-1])
        f_r = f(reflected)
        record(reflected, f_r)

        if f_r < values[0]:
            expanded = centroid + _EXPAND * (reflected - centroid)
            f_e = f(expanded)
            record(expanded, f_e)
            if f_e < f_r:
                simplex[-1], values[-1] = expanded, f_e
            else:
                simplex[-1], values[-1] = reflected, f_r
        elif f_r < values[-2]:
            simplex[-1], values[-1] = reflected, f_r
        else:
            if f_r < values[-1]:
                contracted = centroid + _CONTRACT * (reflected - centroid)
            else:
                contracted = centroid + _CONTRACT * (simplex[-1] - centroid)
            f_c = f(contracted)
            record(contracted, f_c)
            if f_c < min(f_r, values[-1]):
                simplex[-1], values[-1] = contracted, f_c
            else:
                for i in range(1, n + 1):
                    simplex[i] = simplex[0] + _SHRINK * (simplex[i] - simplex[0])
                    values[i] = f(simplex[i])
                    record(simplex[i], values[i])

    return MinimizeResult(
        x=best_x,
        fun=best_f,
        iterations=iteration,
        n_evaluations=evals,
        converged=converged,
    )


def _unit(n, i):
    e = np.zeros(n)
    e[i] = 1.0
    return e
