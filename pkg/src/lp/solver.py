"""LP solving through `scipy.optimize.linprog` (HiGHS dual simplex).

The dual simplex is used so that optimal solutions are basic: the cut loops
and branching rely on extreme points of the relaxation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.optimize import linprog
from scipy.sparse import csr_matrix

from errors import LpError
from log import get_logger
from lp.model import LpModel, Sense

logger = get_logger(__name__)

FEASIBILITY_TOL = 1e-7


class LpStatus(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"
    ITERATION_LIMIT = "iteration-limit"


# linprog status codes -> LpStatus (4 = numerical trouble is raised instead)
_STATUS = {
    0: LpStatus.OPTIMAL,
    1: LpStatus.ITERATION_LIMIT,
    2: LpStatus.INFEASIBLE,
    3: LpStatus.UNBOUNDED,
}


@dataclass
class LpSolution:
    status: LpStatus
    objective: float
    x: np.ndarray
    iterations: int = 0

    @property
    def optimal(self) -> bool:
        return self.status is LpStatus.OPTIMAL


def _matrix(rows: list[tuple[dict[int, float], float]], num_vars: int) -> tuple[csr_matrix | None, np.ndarray | None]:
    if not rows:
        return None, None
    data, indices, indptr = [], [], [0]
    for coefs, _ in rows:
        for j in sorted(coefs):
            indices.append(j)
            data.append(coefs[j])
        indptr.append(len(indices))
    a = csr_matrix((data, indices, indptr), shape=(len(rows), num_vars))
    return a, np.array([rhs for _, rhs in rows], dtype=np.float64)


def _solve_empty(model: LpModel, tol: float) -> LpSolution:
    x = np.zeros(0)
    for row in model.rows:
        if not row.satisfied(x, tol):
            return LpSolution(LpStatus.INFEASIBLE, math.nan, x)
    return LpSolution(LpStatus.OPTIMAL, 0.0, x)


def solve_lp(
    model: LpModel,
    feasibility_tol: float = FEASIBILITY_TOL,
    iteration_limit: int | None = None,
    time_limit: float | None = None,
) -> LpSolution:
    """Solve the continuous relaxation of ``model`` (maximization).

    Args:
        model: Model to solve.
        feasibility_tol: Primal feasibility tolerance.
        iteration_limit: Simplex iteration cap (None = engine default).
        time_limit: Wall-clock cap in seconds (None = unlimited); reported as
            an iteration-limit status when hit.

    Returns:
        Solution with status; ``x`` and ``objective`` are meaningful only when optimal.

    Raises:
        LpError: The engine reported numerical difficulties.
    """
    if model.trivially_infeasible:
        return LpSolution(LpStatus.INFEASIBLE, math.nan, np.zeros(model.num_vars))
    if model.num_vars == 0:
        return _solve_empty(model, feasibility_tol)

    upper: list[tuple[dict[int, float], float]] = []
    equal: list[tuple[dict[int, float], float]] = []
    for row in model.rows:
        if row.sense is Sense.LE:
            upper.append((row.coefs, row.rhs))
        elif row.sense is Sense.GE:
            upper.append(({j: -c for j, c in row.coefs.items()}, -row.rhs))
        else:
            equal.append((row.coefs, row.rhs))

    a_ub, b_ub = _matrix(upper, model.num_vars)
    a_eq, b_eq = _matrix(equal, model.num_vars)
    bounds = [
        (None if math.isinf(lo) else lo, None if math.isinf(hi) else hi) for lo, hi in zip(model.lb, model.ub)
    ]

    options: dict = {"primal_feasibility_tolerance": feasibility_tol}
    if iteration_limit:
        options["maxiter"] = iteration_limit
    if time_limit is not None:
        options["time_limit"] = max(time_limit, 1e-3)

    result = linprog(
        c=-np.asarray(model.obj, dtype=np.float64),
        A_ub=a_ub,
        b_ub=b_ub,
        A_eq=a_eq,
        b_eq=b_eq,
        bounds=bounds,
        method="highs-ds",
        options=options,
    )

    if result.status not in _STATUS:
        raise LpError(f"LP engine failed on '{model.name}': {result.message}")

    status = _STATUS[result.status]
    iterations = int(getattr(result, "nit", 0) or 0)
    if status is not LpStatus.OPTIMAL:
        logger.debug("LP '%s' finished with status %s", model.name, status.value)
        return LpSolution(status, math.nan, np.zeros(model.num_vars), iterations)

    return LpSolution(status, float(-result.fun), np.asarray(result.x, dtype=np.float64), iterations)
