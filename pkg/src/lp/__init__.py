"""Bounded-variable LP models and their solution."""

from lp.lptext import dump_model, write_lp_text
from lp.model import LpModel, LpRow, Sense, add_row, set_bounds
from lp.solver import FEASIBILITY_TOL, LpSolution, LpStatus, solve_lp

__all__ = [
    "FEASIBILITY_TOL",
    "LpModel",
    "LpRow",
    "LpSolution",
    "LpStatus",
    "Sense",
    "add_row",
    "dump_model",
    "set_bounds",
    "solve_lp",
    "write_lp_text",
]
