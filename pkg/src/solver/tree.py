"""Best-bound branch-and-cut over the exponential model, and plain
branch-and-bound over the compact one."""

from __future__ import annotations

import heapq
import math
import time
from dataclasses import dataclass, field

import numpy as np

from errors import GraphError, SolverError
from formulations import build_compact, build_exponential_base, vertex_values
from graph import Matching, is_connected_matching, is_matching, matching_weight
from instance import Instance
from log import emit, get_logger
from lp import LpModel, LpStatus, dump_model
from separation import BlossomSeparator, Cut, separate_blossom_heuristic, separate_msi_fractional, separate_msi_integer
from solver.heuristic import primal_heuristic
from solver.result import RootStats, SolveResult, SolveStatus, empty_cut_counts, gap
from solver.root import LpStats, add_cuts, solve_relaxation, strengthen_root
from solver.settings import Formulation, SolverConfig

logger = get_logger(__name__)

OPTIMALITY_GAP = 1e-6


@dataclass(order=True)
class _Node:
    priority: tuple[float, int]
    depth: int = field(compare=False)
    fixings: tuple[tuple[int, float], ...] = field(compare=False)

    @property
    def bound(self) -> float:
        return -self.priority[0]


class _Stop(Exception):
    def __init__(self, status: SolveStatus):
        self.status = status


class _Search:
    """State of one branch-and-bound run."""

    def __init__(self, inst: Instance, cfg: SolverConfig, incumbent: Matching | None):
        self.inst = inst
        self.g = inst.graph
        self.cfg = cfg
        self.start = time.perf_counter()
        self.lp = LpStats()
        self.nodes = 0
        self.lazy = 0
        self.cuts = empty_cut_counts()
        self.seen: set[tuple] = set()
        self.open: list[_Node] = []
        self.seq = 0
        self.best: Matching = frozenset()
        self.lb = 0.0
        self.integral_objective = bool(np.all(inst.weights == np.round(inst.weights)))
        if incumbent is not None:
            self._offer(incumbent, source="warm-start")

    # -- bookkeeping -------------------------------------------------------

    def elapsed(self) -> float:
        return time.perf_counter() - self.start

    def time_left(self) -> float:
        return self.cfg.time_limit - self.elapsed()

    def _emit(self, event: str, **fields) -> None:
        emit(logger, event, elapsed=round(self.elapsed(), 6), **fields)

    def _offer(self, matching: Matching, source: str) -> None:
        if not is_matching(self.g, matching) or not is_connected_matching(self.g, matching):
            if source == "warm-start":
                raise GraphError("warm-start incumbent is not a connected matching")
            raise SolverError(f"{source} produced an infeasible incumbent {sorted(matching)}")
        value = matching_weight(self.inst.weights, matching)
        if value > self.lb + 1e-9:
            self.lb = value
            self.best = frozenset(matching)
            self._emit("incumbent", value=value, source=source)

    def prunable(self, bound: float) -> bool:
        if bound - self.lb <= OPTIMALITY_GAP * max(1.0, abs(bound)):
            return True
        return self.integral_objective and bound < self.lb + 1.0 - OPTIMALITY_GAP

    def push(self, bound: float, depth: int, fixings: tuple[tuple[int, float], ...]) -> None:
        heapq.heappush(self.open, _Node((-bound, self.seq), depth, fixings))
        self.seq += 1

    def upper_bound(self, current: float = -math.inf) -> float:
        """Global dual bound; ``current`` is the bound of the node being processed."""
        top = self.open[0].bound if self.open else -math.inf
        return max(self.lb, current, top)

    def check_limits(self) -> None:
        if self.time_left() <= 0:
            raise _Stop(SolveStatus.TIME_LIMIT)
        if self.cfg.node_limit and self.nodes >= self.cfg.node_limit:
            raise _Stop(SolveStatus.NODE_LIMIT)

    # -- node processing ---------------------------------------------------

    def solve_node(self, model: LpModel, fixings: tuple[tuple[int, float], ...]):
        saved = [(j, model.lb[j], model.ub[j]) for j, _ in fixings]
        for j, value in fixings:
            model.lb[j] = model.ub[j] = value
        try:
            return solve_relaxation(model, self.cfg, self.lp, max(self.time_left(), 0.0))
        finally:
            for j, lo, hi in saved:
                model.lb[j], model.ub[j] = lo, hi

    def branch(self, node: _Node, bound: float, x: np.ndarray, candidates: list[list[int]]) -> bool:
        """Split on the most fractional variable of the first group that has one."""
        tol = self.cfg.integrality_tol
        for group in candidates:
            best, score = -1, tol
            for j in group:
                frac = min(x[j] - math.floor(x[j]), math.ceil(x[j]) - x[j])
                if frac > score:
                    best, score = j, frac
            if best >= 0:
                self.push(bound, node.depth + 1, node.fixings + ((best, 1.0),))
                self.push(bound, node.depth + 1, node.fixings + ((best, 0.0),))
                return True
        return False

    def try_heuristic(self, x_edges: np.ndarray) -> None:
        if not self.cfg.primal_heuristic:
            return
        found = primal_heuristic(vertex_values(x_edges, self.g), self.inst)
        if found is not None:
            self._offer(found, source="heuristic")

    def run(self, model: LpModel, x_vars: list[int], branch_groups: list[list[int]], with_cuts: bool) -> SolveStatus:
        """Process open nodes best-bound first until none is left or a limit hits."""
        tol = self.cfg.integrality_tol
        while self.open:
            node = heapq.heappop(self.open)
            if node.depth and self.prunable(node.bound):
                continue
            try:
                self.check_limits()
            except _Stop:
                heapq.heappush(self.open, node)
                raise
            self.nodes += 1
            rounds = 0

            while True:
                sol = self.solve_node(model, node.fixings)
                if sol.status is LpStatus.ITERATION_LIMIT:
                    heapq.heappush(self.open, node)
                    if self.time_left() <= 0:
                        raise _Stop(SolveStatus.TIME_LIMIT)
                    raise _Stop(SolveStatus.FEASIBLE)
                if sol.status is LpStatus.INFEASIBLE:
                    break
                if not sol.optimal:
                    raise SolverError(f"node relaxation is {sol.status.value}")

                bound = min(sol.objective, node.bound)
                self._emit(
                    "node",
                    node=self.nodes,
                    depth=node.depth,
                    bound=bound,
                    ub=self.upper_bound(bound),
                    incumbent=self.lb,
                )
                if self.prunable(bound):
                    break

                x_edges = sol.x[x_vars]
                self.try_heuristic(x_edges)
                if self.prunable(bound):
                    break

                pt = vertex_values(x_edges, self.g)
                integral = all(abs(sol.x[j] - round(sol.x[j])) <= tol for group in branch_groups for j in group)
                if integral:
                    if not with_cuts:
                        self._offer(frozenset(int(e) for e in np.flatnonzero(pt.x > 0.5)), source="compact-lp")
                        break
                    lazy = separate_msi_integer(self.g, pt, tol)
                    if not lazy:
                        self._offer(frozenset(int(e) for e in np.flatnonzero(pt.x > 0.5)), source="lp")
                        break
                    added = add_cuts(model, lazy, x_vars, self.seen)
                    if not added:
                        raise SolverError("integral point violates a lazy row already in the model")
                    self.lazy += len(added)
                    self._emit("lazy", cuts=len(added))
                    continue

                if with_cuts and rounds < self.cfg.node_cut_rounds:
                    added = self._node_cuts(model, pt, x_vars)
                    if added:
                        rounds += 1
                        continue

                if not self.branch(node, bound, sol.x, branch_groups):
                    raise SolverError("fractional relaxation has no branching candidate")
                break

        return SolveStatus.OPTIMAL

    def _node_cuts(self, model: LpModel, pt, x_vars: list[int]) -> list[Cut]:
        tol = self.cfg.cut_violation_tol
        cuts = separate_msi_fractional(self.g, pt, mode="first", contract=self.cfg.contract_integral, tol=tol)
        cuts += separate_blossom_heuristic(self.g, pt, tol=tol, integrality_tol=self.cfg.integrality_tol)
        added = add_cuts(model, cuts, x_vars, self.seen)
        for cut in added:
            self.cuts[cut.family] += 1
        return added

    def result(self, status: SolveStatus, formulation: Formulation, lp_bound: float, root: RootStats | None) -> SolveResult:
        ub = self.lb if status.solved else self.upper_bound()
        if not status.solved and gap(self.lb, ub) <= OPTIMALITY_GAP:
            status, ub = SolveStatus.OPTIMAL, self.lb
        root_bound = root.root_bound if root is not None else lp_bound
        result = SolveResult(
            status=status,
            formulation=formulation.value,
            matching=self.best,
            lb=self.lb,
            ub=ub,
            nodes=self.nodes,
            cuts=dict(self.cuts),
            lazy=self.lazy,
            lp_bound=lp_bound,
            root_bound=root_bound,
            lp_iterations=self.lp.iterations,
            lp_time=self.lp.seconds,
            time=self.elapsed(),
            root=root,
        )
        self._emit("done", status=status.value, lb=result.lb, ub=result.ub, nodes=result.nodes)
        return result


def _dump(model: LpModel, cfg: SolverConfig, tag: str) -> None:
    if cfg.dump_dir is not None:
        path = dump_model(model, cfg.dump_dir, tag)
        logger.debug("wrote %s", path)


def _solve_exponential(search: _Search) -> SolveResult:
    inst, cfg = search.inst, search.cfg
    model, x_vars = build_exponential_base(inst)
    _dump(model, cfg, "base")

    model, root = strengthen_root(
        inst,
        model,
        cfg,
        x_vars=x_vars,
        separator=BlossomSeparator(inst.graph),
        seen=search.seen,
        lp_stats=search.lp,
        start=search.start,
    )
    for family, count in root.cuts.items():
        search.cuts[family] += count
    _dump(model, cfg, "root")

    if math.isnan(root.root_bound):
        search.push(math.inf, 0, ())
        return search.result(SolveStatus.TIME_LIMIT, Formulation.EXPONENTIAL, root.lp_bound, root)

    search.push(root.root_bound, 0, ())
    try:
        status = search.run(model, x_vars, [x_vars], with_cuts=True)
    except _Stop as stop:
        status = stop.status
    return search.result(status, Formulation.EXPONENTIAL, root.lp_bound, root)


def _solve_compact(search: _Search) -> SolveResult:
    inst, cfg = search.inst, search.cfg
    model, varmap = build_compact(inst, arc_opening=cfg.arc_opening)
    _dump(model, cfg, "compact")

    sol = solve_relaxation(model, cfg, search.lp, max(search.time_left(), 0.0))
    if sol.status is LpStatus.ITERATION_LIMIT:
        search.push(math.inf, 0, ())
        return search.result(SolveStatus.TIME_LIMIT, Formulation.COMPACT, math.nan, None)
    if not sol.optimal:
        raise SolverError(f"compact relaxation of '{inst.name}' is {sol.status.value}")

    search.push(sol.objective, 0, ())
    try:
        status = search.run(model, varmap.x, [varmap.x, varmap.y], with_cuts=False)
    except _Stop as stop:
        status = stop.status
    return search.result(status, Formulation.COMPACT, sol.objective, None)


def solve(inst: Instance, cfg: SolverConfig | None = None, incumbent: Matching | None = None) -> SolveResult:
    """Solve a WCM instance exactly (up to the configured limits).

    Args:
        inst: Instance.
        cfg: Settings; defaults when omitted.
        incumbent: Known connected matching to start from.

    Returns:
        The result. Running out of time or nodes is a status, not an error;
        the empty matching (value 0) is always a valid fallback.

    Raises:
        GraphError: ``incumbent`` is not a connected matching.
        SolverError: An internal invariant of the search broke.
    """
    cfg = cfg or SolverConfig()
    search = _Search(inst, cfg, incumbent)

    if inst.m == 0:
        search.nodes = 1
        return search.result(SolveStatus.OPTIMAL, cfg.formulation, 0.0, None)

    logger.debug("solving '%s' (n=%d, m=%d) with %s", inst.name, inst.n, inst.m, cfg.formulation.value)
    if cfg.formulation is Formulation.COMPACT:
        return _solve_compact(search)
    return _solve_exponential(search)
