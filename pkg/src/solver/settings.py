"""Typed solver settings built from the merged configuration."""

from __future__ import annotations

from dataclasses import dataclass, fields
from enum import Enum
from pathlib import Path
from typing import Any


class Formulation(Enum):
    COMPACT = "compact"
    EXPONENTIAL = "exponential"


@dataclass
class SolverConfig:
    """Settings for one solve.

    ``root_cap`` and ``root_fraction`` together bound the time spent
    strengthening the root: ``root_cap_s = min(root_cap, root_fraction * time_limit)``.
    """

    formulation: Formulation = Formulation.EXPONENTIAL
    time_limit: float = 3600.0
    root_cap: float = 300.0
    root_fraction: float = 0.10
    cut_violation_tol: float = 1e-5
    integrality_tol: float = 1e-6
    seed: int = 0
    arc_opening: bool = True
    contract_integral: bool = True
    primal_heuristic: bool = True
    node_limit: int = 0
    node_cut_rounds: int = 20
    feasibility_tol: float = 1e-7
    iteration_limit: int = 0
    dump_dir: Path | None = None

    def __post_init__(self) -> None:
        if isinstance(self.formulation, str):
            self.formulation = Formulation(self.formulation)
        if self.time_limit <= 0:
            raise ValueError("time_limit must be positive")
        if self.cut_violation_tol <= 0 or self.integrality_tol <= 0:
            raise ValueError("tolerances must be positive")
        if isinstance(self.dump_dir, str):
            self.dump_dir = Path(self.dump_dir) if self.dump_dir else None

    @property
    def root_cap_s(self) -> float:
        return min(self.root_cap, self.root_fraction * self.time_limit)

    @classmethod
    def from_config(cls, config: dict[str, Any], **overrides: Any) -> SolverConfig:
        """Build from a ``load_config()`` dictionary; ``None`` overrides are skipped."""
        known = {f.name for f in fields(cls)}
        values: dict[str, Any] = {}
        for section in ("solver", "lp"):
            values.update({k: v for k, v in config.get(section, {}).items() if k in known})
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)
