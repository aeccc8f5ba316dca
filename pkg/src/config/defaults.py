"""Default configuration values."""

from typing import Any

DEFAULT_CONFIG: dict[str, Any] = {
    "solver": {
        "formulation": "exponential",
        "time_limit": 3600.0,
        "root_cap": 300.0,
        "root_fraction": 0.10,
        "cut_violation_tol": 1e-5,
        "integrality_tol": 1e-6,
        "seed": 0,
        "arc_opening": True,
        "contract_integral": True,
        "primal_heuristic": True,
        "node_limit": 0,
        "node_cut_rounds": 20,
    },
    "lp": {
        "feasibility_tol": 1e-7,
        "iteration_limit": 0,
        "dump_dir": "",
    },
    "bench": {
        "workers": 1,
        "oracle_max_edges": 24,
    },
}
