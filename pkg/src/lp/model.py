"""Bounded-variable linear programs in sparse row form (maximization)."""

from __future__ import annotations

import copy
import math
from dataclasses import dataclass, field
from enum import Enum

from errors import LpError


class Sense(Enum):
    """Row sense."""

    LE = "<="
    EQ = "="
    GE = ">="


@dataclass
class LpRow:
    """``sum(coefs[j] * x_j) <sense> rhs``."""

    coefs: dict[int, float]
    sense: Sense
    rhs: float
    name: str = ""

    def activity(self, x) -> float:
        return math.fsum(c * float(x[j]) for j, c in self.coefs.items())

    def satisfied(self, x, tol: float) -> bool:
        lhs = self.activity(x)
        if self.sense is Sense.LE:
            return lhs <= self.rhs + tol
        if self.sense is Sense.GE:
            return lhs >= self.rhs - tol
        return abs(lhs - self.rhs) <= tol


@dataclass
class LpModel:
    """A maximization LP with variable bounds and sparse rows.

    Variables flagged ``integer`` are only a hint for the branch-and-cut
    driver; this model itself is always solved as a continuous relaxation.
    """

    name: str = "wcm"
    lb: list[float] = field(default_factory=list)
    ub: list[float] = field(default_factory=list)
    obj: list[float] = field(default_factory=list)
    names: list[str] = field(default_factory=list)
    integer: list[bool] = field(default_factory=list)
    rows: list[LpRow] = field(default_factory=list)

    @property
    def num_vars(self) -> int:
        return len(self.obj)

    @property
    def row_count(self) -> int:
        return len(self.rows)

    @property
    def integer_vars(self) -> list[int]:
        return [j for j, flag in enumerate(self.integer) if flag]

    @property
    def trivially_infeasible(self) -> bool:
        """True when some variable has ``lb > ub``."""
        return any(lo > hi for lo, hi in zip(self.lb, self.ub))

    def add_var(
        self,
        lb: float = 0.0,
        ub: float = math.inf,
        obj: float = 0.0,
        name: str = "",
        integer: bool = False,
    ) -> int:
        """Append a variable and return its id."""
        self.lb.append(float(lb))
        self.ub.append(float(ub))
        self.obj.append(float(obj))
        self.names.append(name or f"v{len(self.obj) - 1}")
        self.integer.append(integer)
        return len(self.obj) - 1

    def copy(self) -> LpModel:
        return copy.deepcopy(self)


def _check_var(model: LpModel, var: int) -> None:
    if not 0 <= var < model.num_vars:
        raise LpError(f"unknown variable id {var} (model has {model.num_vars})")


def add_row(model: LpModel, row: LpRow) -> int:
    """Append a row and return its id.

    Raises:
        LpError: The row references an unknown variable or has a non-finite coefficient.
    """
    for j, c in row.coefs.items():
        _check_var(model, j)
        if not math.isfinite(c):
            raise LpError(f"row '{row.name}' has non-finite coefficient on variable {j}")
    if not math.isfinite(row.rhs):
        raise LpError(f"row '{row.name}' has non-finite right-hand side")
    model.rows.append(row)
    return len(model.rows) - 1


def set_bounds(model: LpModel, var: int, lb: float, ub: float) -> None:
    """Replace the bounds of one variable.

    Raises:
        LpError: Unknown variable id.
    """
    _check_var(model, var)
    model.lb[var] = float(lb)
    model.ub[var] = float(ub)
