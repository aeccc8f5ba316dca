"""LP-text dump of a model, for debugging."""

from __future__ import annotations

import math
from pathlib import Path

from lp.model import LpModel, LpRow


def _term(coef: float, name: str, first: bool) -> str:
    sign = "-" if coef < 0 else ("" if first else "+")
    magnitude = abs(coef)
    body = name if magnitude == 1 else f"{magnitude:g} {name}"
    return f"{sign} {body}".strip() if first else f"{sign} {body}"


def _expression(coefs: dict[int, float], names: list[str]) -> str:
    terms = [_term(c, names[j], i == 0) for i, (j, c) in enumerate(sorted(coefs.items())) if c != 0]
    return " ".join(terms) if terms else "0"


def _row(row: LpRow, index: int, names: list[str]) -> str:
    label = row.name or f"r{index}"
    return f" {label}: {_expression(row.coefs, names)} {row.sense.value} {row.rhs:g}"


def write_lp_text(model: LpModel) -> str:
    """Render the model in CPLEX-LP-like text."""
    lines = [f"\\ {model.name}", "Maximize", f" obj: {_expression(dict(enumerate(model.obj)), model.names)}"]

    lines.append("Subject To")
    lines.extend(_row(row, i, model.names) for i, row in enumerate(model.rows))

    lines.append("Bounds")
    for name, lo, hi in zip(model.names, model.lb, model.ub):
        lo_text = "-inf" if math.isinf(lo) else f"{lo:g}"
        hi_text = "+inf" if math.isinf(hi) else f"{hi:g}"
        lines.append(f" {lo_text} <= {name} <= {hi_text}")

    generals = [model.names[j] for j in model.integer_vars]
    if generals:
        lines.append("Generals")
        lines.append(" " + " ".join(generals))

    lines.append("End")
    return "\n".join(lines) + "\n"


def dump_model(model: LpModel, directory: Path, tag: str) -> Path:
    """Write ``<directory>/<model.name>-<tag>.lp`` and return the path."""
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"{model.name}-{tag}.lp"
    path.write_text(write_lp_text(model), encoding="utf-8")
    return path
