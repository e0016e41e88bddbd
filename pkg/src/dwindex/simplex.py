"""Dense two-phase simplex solver with Bland's rule.

Solves  minimize c.x  subject to  A_ub x <= b_ub,  A_eq x = b_eq,  x >= 0.
The certifier's minimax programs have at most a dozen variables and a few
tens of constraints, so a plain dense tableau is entirely adequate.
Bland's rule (lowest-index entering column, lowest-index leaving basic
variable among ratio ties) guarantees termination; the iteration cap is a
cycling guard whose violation signals a bug, not a data condition.
"""

from __future__ import annotations

import numpy as np

from .errors import LPFailure

_EPS = 1e-10


class Infeasible(ValueError):
    """The constraint system admits no nonnegative solution."""


class Unbounded(ValueError):
    """The objective decreases without bound over the feasible set."""


def _pivot(tableau: np.ndarray, row: int, col: int) -> None:
    tableau[row] /= tableau[row, col]
    for i in range(tableau.shape[0]):
        if i != row and abs(tableau[i, col]) > 0.0:
            tableau[i] -= tableau[i, col] * tableau[row]


def _run_phase(tableau: np.ndarray, basis: np.ndarray, ncols: int, max_iter: int) -> None:
    """Minimize the cost row in place; Bland's rule on the first ncols columns."""
    for _ in range(max_iter):
        cost = tableau[-1, :ncols]
        entering = -1
        for j in range(ncols):
            if cost[j] < -_EPS:
                entering = j
                break
        if entering < 0:
            return
        col = tableau[:-1, entering]
        rhs = tableau[:-1, -1]
        candidates = [i for i in range(col.shape[0]) if col[i] > _EPS]
        if not candidates:
            raise Unbounded("objective is unbounded below")
        ratios = {i: rhs[i] / col[i] for i in candidates}
        best_ratio = min(ratios.values())
        tied = [i for i in candidates if ratios[i] <= best_ratio + _EPS]
        leaving = min(tied, key=lambda i: basis[i])
        _pivot(tableau, leaving, entering)
        basis[leaving] = entering
    raise LPFailure("simplex iteration cap exceeded")


def solve_lp(
    c,
    a_ub=None,
    b_ub=None,
    a_eq=None,
    b_eq=None,
    max_iter: int = 2000,
) -> tuple[np.ndarray, float]:
    """Solve the LP and return (x, objective value).

    Raises :class:`Infeasible` / :class:`Unbounded` for those outcomes and
    :class:`~dwindex.errors.LPFailure` when the cycling guard trips.
    """
    c = np.asarray(c, dtype=float)
    n = c.shape[0]
    rows = []
    rhs = []
    n_slack = 0
    if a_ub is not None:
        a_ub = np.asarray(a_ub, dtype=float)
        b_ub = np.asarray(b_ub, dtype=float)
        n_slack = a_ub.shape[0]
    if a_eq is not None:
        a_eq = np.asarray(a_eq, dtype=float)
        b_eq = np.asarray(b_eq, dtype=float)

    m = n_slack + (0 if a_eq is None else a_eq.shape[0])
    if m == 0:
        raise ValueError("LP needs at least one constraint")

    # columns: n structural | n_slack slacks | m artificials | rhs
    full = np.zeros((m, n + n_slack + m + 1))
    r = 0
    if a_ub is not None:
        for i in range(a_ub.shape[0]):
            full[r, :n] = a_ub[i]
            full[r, n + i] = 1.0
            full[r, -1] = b_ub[i]
            r += 1
    if a_eq is not None:
        for i in range(a_eq.shape[0]):
            full[r, :n] = a_eq[i]
            full[r, -1] = b_eq[i]
            r += 1
    neg = full[:, -1] < 0.0
    full[neg] *= -1.0
    for i in range(m):
        full[i, n + n_slack + i] = 1.0

    basis = np.arange(n + n_slack, n + n_slack + m)

    # phase 1: minimize the sum of artificials
    tableau = np.vstack([full, np.zeros(full.shape[1])])
    tableau[-1, n + n_slack : n + n_slack + m] = 1.0
    for i in range(m):
        tableau[-1] -= tableau[i]
    _run_phase(tableau, basis, n + n_slack, max_iter)
    if tableau[-1, -1] < -1e-7:
        raise Infeasible(f"phase-1 objective {-tableau[-1, -1]:.3e} > 0")

    # drive any lingering artificials out of the basis
    for i in range(m):
        if basis[i] >= n + n_slack:
            row = tableau[i, : n + n_slack]
            cols = np.nonzero(np.abs(row) > _EPS)[0]
            if cols.size:
                _pivot(tableau, i, int(cols[0]))
                basis[i] = int(cols[0])
            # an all-zero row is a redundant constraint; leave it be

    # phase 2 on the original objective
    tableau2 = np.vstack(
        [
            np.hstack([tableau[:-1, : n + n_slack], tableau[:-1, -1:]]),
            np.zeros(n + n_slack + 1),
        ]
    )
    tableau2[-1, :n] = c
    for i in range(m):
        if basis[i] < n + n_slack:
            tableau2[-1] -= tableau2[-1, basis[i]] * tableau2[i]
    _run_phase(tableau2, basis, n + n_slack, max_iter)

    x = np.zeros(n + n_slack)
    for i in range(m):
        if basis[i] < n + n_slack:
            x[basis[i]] = tableau2[i, -1]
    return x[:n].copy(), float(np.dot(c, x[:n]))
