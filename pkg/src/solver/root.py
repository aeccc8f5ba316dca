"""Root strengthening: alternate LP solves and cut rounds before branching."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from errors import SolverError
from formulations import FractionalPoint, vertex_values
from instance import Instance
from log import emit, get_logger
from lp import LpModel, LpSolution, LpStatus, add_row, solve_lp
from separation import (
    BlossomSeparator,
    Cut,
    CutFamily,
    separate_blossom_exact,
    separate_blossom_heuristic,
    separate_indegree,
    separate_msi_fractional,
    separate_msi_integer,
)
from solver.result import RootStats
from solver.settings import SolverConfig

logger = get_logger(__name__)


@dataclass
class LpStats:
    """Running totals over every LP solved during one search."""

    solves: int = 0
    iterations: int = 0
    seconds: float = 0.0


def solve_relaxation(model: LpModel, cfg: SolverConfig, stats: LpStats, time_left: float | None = None) -> LpSolution:
    began = time.perf_counter()
    sol = solve_lp(
        model,
        feasibility_tol=cfg.feasibility_tol,
        iteration_limit=cfg.iteration_limit or None,
        time_limit=time_left,
    )
    stats.solves += 1
    stats.iterations += sol.iterations
    stats.seconds += time.perf_counter() - began
    return sol


def add_cuts(model: LpModel, cuts: list[Cut], x_vars: list[int], seen: set[tuple]) -> list[Cut]:
    """Append the cuts whose key is new; return those that were added."""
    added = []
    for cut in cuts:
        key = cut.key()
        if key in seen:
            continue
        seen.add(key)
        add_row(model, cut.to_row(x_vars))
        added.append(cut)
    return added


def root_cut_round(
    inst: Instance,
    pt: FractionalPoint,
    cfg: SolverConfig,
    separator: BlossomSeparator,
) -> list[Cut]:
    """One round of the root cascade.

    Every violated MSI and the odd fractional components come first; exact
    blossom separation runs only on a fractional point where both found
    nothing, and indegree separation only when everything else failed.
    """
    g = inst.graph
    tol = cfg.cut_violation_tol
    cuts = separate_msi_fractional(g, pt, mode="all", contract=cfg.contract_integral, tol=tol)
    cuts += separate_blossom_heuristic(g, pt, tol=tol, integrality_tol=cfg.integrality_tol)
    if not cuts and not pt.is_integral(cfg.integrality_tol):
        cuts = separate_blossom_exact(g, pt, separator=separator, tol=tol)
    if not cuts:
        indegree = separate_indegree(g, pt, tol=tol)
        cuts = [indegree] if indegree is not None else []
    return cuts


def strengthen_root(
    inst: Instance,
    model: LpModel,
    cfg: SolverConfig,
    *,
    x_vars: list[int] | None = None,
    separator: BlossomSeparator | None = None,
    seen: set[tuple] | None = None,
    lp_stats: LpStats | None = None,
    start: float | None = None,
) -> tuple[LpModel, RootStats]:
    """Tighten the exponential base model at the root.

    Cuts are appended to ``model`` in place. The loop ends when a round adds
    no cut, the LP optimum is integral and connected, or ``cfg.root_cap_s``
    has elapsed (the LP in progress is finished first).

    Args:
        inst: Instance.
        model: Exponential base model (possibly with earlier cuts).
        cfg: Solver settings.
        x_vars: Model variable of each edge; identity by default.
        separator: Blossom support graph to reuse.
        seen: Keys of cuts already in the model.
        lp_stats: LP totals to update.
        start: ``time.perf_counter()`` reading the cap is measured from.

    Returns:
        The model and the root statistics.

    Raises:
        SolverError: The relaxation is infeasible or unbounded.
    """
    g = inst.graph
    x_vars = x_vars if x_vars is not None else list(range(g.m))
    separator = separator or BlossomSeparator(g)
    seen = seen if seen is not None else set()
    lp_stats = lp_stats or LpStats()
    start = time.perf_counter() if start is None else start
    cap = cfg.root_cap_s
    stats = RootStats()

    while True:
        elapsed = time.perf_counter() - start
        sol = solve_relaxation(model, cfg, lp_stats, max(cfg.time_limit - elapsed, 0.0))
        if sol.status is LpStatus.ITERATION_LIMIT:
            stats.capped = True
            break
        if not sol.optimal:
            raise SolverError(f"root relaxation of '{inst.name}' is {sol.status.value}")

        stats.root_bound = sol.objective
        if math.isnan(stats.lp_bound):
            stats.lp_bound = sol.objective

        pt = vertex_values(sol.x[x_vars], g)
        if pt.is_integral(cfg.integrality_tol) and not separate_msi_integer(g, pt, cfg.integrality_tol):
            stats.integral_connected = True
            break

        cuts = add_cuts(model, root_cut_round(inst, pt, cfg, separator), x_vars, seen)
        if not cuts:
            break

        stats.rounds += 1
        for cut in cuts:
            stats.cuts[cut.family] += 1
        emit(
            logger,
            "root_round",
            elapsed=round(time.perf_counter() - start, 6),
            round=stats.rounds,
            bound=sol.objective,
            msi=sum(c.family is CutFamily.MSI for c in cuts),
            blossom=sum(c.family is CutFamily.BLOSSOM for c in cuts),
            indegree=sum(c.family is CutFamily.INDEGREE for c in cuts),
        )

        if time.perf_counter() - start >= cap:
            stats.capped = True
            break

    stats.elapsed = time.perf_counter() - start
    return model, stats
