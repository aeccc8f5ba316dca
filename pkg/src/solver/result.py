"""Solve outcomes."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from graph import Matching
from separation import CutFamily


class SolveStatus(Enum):
    OPTIMAL = "optimal"
    FEASIBLE = "feasible"
    TIME_LIMIT = "time-limit"
    NODE_LIMIT = "node-limit"

    @property
    def solved(self) -> bool:
        return self is SolveStatus.OPTIMAL


def empty_cut_counts() -> dict[CutFamily, int]:
    return {family: 0 for family in CutFamily}


@dataclass
class RootStats:
    """What the root strengthening loop did."""

    rounds: int = 0
    cuts: dict[CutFamily, int] = field(default_factory=empty_cut_counts)
    lp_bound: float = math.nan
    root_bound: float = math.nan
    elapsed: float = 0.0
    integral_connected: bool = False
    capped: bool = False


def gap(lb: float, ub: float) -> float:
    """``(UB - LB) / max(1, |UB|)``; 0 when both bounds are equal."""
    if lb == ub:
        return 0.0
    if math.isinf(ub):
        return math.inf
    return (ub - lb) / max(1.0, abs(ub))


@dataclass
class SolveResult:
    status: SolveStatus
    formulation: str
    matching: Matching
    lb: float
    ub: float
    nodes: int = 0
    cuts: dict[CutFamily, int] = field(default_factory=empty_cut_counts)
    lazy: int = 0
    lp_bound: float = math.nan
    root_bound: float = math.nan
    lp_iterations: int = 0
    lp_time: float = 0.0
    time: float = 0.0
    root: RootStats | None = None

    @property
    def gap(self) -> float:
        return gap(self.lb, self.ub)

    @property
    def root_only(self) -> bool:
        return self.nodes == 1

    def to_dict(self) -> dict[str, Any]:
        """JSON-serializable summary."""

        def number(value: float) -> float | None:
            return value if math.isfinite(value) else None

        return {
            "status": self.status.value,
            "formulation": self.formulation,
            "lb": self.lb,
            "ub": number(self.ub),
            "gap": number(self.gap),
            "matching": sorted(self.matching),
            "nodes": self.nodes,
            "root_only": self.root_only,
            "cuts": {family.value: count for family, count in self.cuts.items()},
            "lazy": self.lazy,
            "lp_bound": number(self.lp_bound),
            "root_bound": number(self.root_bound),
            "lp_iterations": self.lp_iterations,
            "lp_time": self.lp_time,
            "time": self.time,
        }
