"""Configuration schema validation."""

from typing import Any

VALID_FORMULATIONS = {"compact", "exponential"}

_POSITIVE_FLOATS = {
    "solver": ("time_limit", "root_cap", "cut_violation_tol", "integrality_tol"),
    "lp": ("feasibility_tol",),
}
_NON_NEGATIVE_INTS = {
    "solver": ("seed", "node_limit", "node_cut_rounds"),
    "lp": ("iteration_limit",),
    "bench": ("oracle_max_edges",),
}
_BOOLEANS = {"solver": ("arc_opening", "contract_integral", "primal_heuristic")}


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def validate_config(config: dict[str, Any]) -> None:
    """Validate configuration dictionary.

    Args:
        config: Configuration dictionary to validate.

    Raises:
        ValueError: If configuration is invalid.
    """
    solver = config.get("solver", {})
    if "formulation" in solver and solver["formulation"] not in VALID_FORMULATIONS:
        raise ValueError(
            f"Invalid formulation '{solver['formulation']}'. Must be one of: {', '.join(sorted(VALID_FORMULATIONS))}"
        )

    for section, keys in _POSITIVE_FLOATS.items():
        for key in keys:
            if key in config.get(section, {}):
                value = config[section][key]
                if not _is_number(value) or value <= 0:
                    raise ValueError(f"{section}.{key} must be a positive number")

    for section, keys in _NON_NEGATIVE_INTS.items():
        for key in keys:
            if key in config.get(section, {}):
                value = config[section][key]
                if not _is_int(value) or value < 0:
                    raise ValueError(f"{section}.{key} must be a non-negative integer")

    for section, keys in _BOOLEANS.items():
        for key in keys:
            if key in config.get(section, {}) and not isinstance(config[section][key], bool):
                raise ValueError(f"{section}.{key} must be a boolean")

    if "root_fraction" in solver:
        fraction = solver["root_fraction"]
        if not _is_number(fraction) or not 0 < fraction <= 1:
            raise ValueError("solver.root_fraction must be in (0, 1]")

    if "dump_dir" in config.get("lp", {}) and not isinstance(config["lp"]["dump_dir"], str):
        raise ValueError("lp.dump_dir must be a string")

    if "workers" in config.get("bench", {}):
        workers = config["bench"]["workers"]
        if not _is_int(workers) or workers < 1:
            raise ValueError("bench.workers must be a positive integer")
