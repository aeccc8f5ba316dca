"""Branch-and-cut search for maximum-weight connected matchings."""

from solver.heuristic import primal_heuristic
from solver.result import RootStats, SolveResult, SolveStatus, gap
from solver.root import LpStats, root_cut_round, strengthen_root
from solver.settings import Formulation, SolverConfig
from solver.tree import OPTIMALITY_GAP, solve

__all__ = [
    "OPTIMALITY_GAP",
    "Formulation",
    "LpStats",
    "RootStats",
    "SolveResult",
    "SolveStatus",
    "SolverConfig",
    "gap",
    "primal_heuristic",
    "root_cut_round",
    "solve",
    "strengthen_root",
]
