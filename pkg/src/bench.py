"""Benchmark harness: solve instance files under each formulation and report.

The CSV report is the primary output; its column order is fixed. The JSON
report mirrors the rows and adds the aggregate counters.
"""

from __future__ import annotations

import csv
import io
import json
import math
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields, replace
from pathlib import Path
from typing import Any

from errors import WcmError
from formats import guess_format, read_instance
from log import get_logger
from oracle import MAX_EDGES, brute_force_wcm
from separation import CutFamily
from solver import Formulation, SolveResult, SolverConfig, SolveStatus, solve

logger = get_logger(__name__)

COLUMNS = (
    "instance",
    "n",
    "m",
    "formulation",
    "status",
    "lb",
    "ub",
    "gap",
    "lp_bound",
    "root_bound",
    "root_only",
    "nodes",
    "cuts_msi",
    "cuts_indegree",
    "cuts_blossom",
    "lazy",
    "time",
    "oracle",
    "mismatch",
    "error",
)

FAILED = "failed"
DOMINANCE_TOL = 1e-6


def _finite(value: float) -> float | None:
    return float(value) if math.isfinite(value) else None


@dataclass
class ReportRow:
    """One instance solved under one formulation."""

    instance: str
    n: int = 0
    m: int = 0
    formulation: str = ""
    status: str = FAILED
    lb: float | None = None
    ub: float | None = None
    gap: float | None = None
    lp_bound: float | None = None
    root_bound: float | None = None
    root_only: bool = False
    nodes: int = 0
    cuts_msi: int = 0
    cuts_indegree: int = 0
    cuts_blossom: int = 0
    lazy: int = 0
    time: float = 0.0
    oracle: float | None = None
    mismatch: bool = False
    error: str = ""

    @property
    def solved(self) -> bool:
        return self.status == SolveStatus.OPTIMAL.value

    @property
    def failed(self) -> bool:
        return self.status == FAILED

    @classmethod
    def from_result(cls, instance: str, n: int, m: int, result: SolveResult) -> ReportRow:
        return cls(
            instance=instance,
            n=n,
            m=m,
            formulation=result.formulation,
            status=result.status.value,
            lb=result.lb,
            ub=_finite(result.ub),
            gap=_finite(result.gap),
            lp_bound=_finite(result.lp_bound),
            root_bound=_finite(result.root_bound),
            root_only=result.root_only,
            nodes=result.nodes,
            cuts_msi=result.cuts[CutFamily.MSI],
            cuts_indegree=result.cuts[CutFamily.INDEGREE],
            cuts_blossom=result.cuts[CutFamily.BLOSSOM],
            lazy=result.lazy,
            time=result.time,
        )


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(float(value))
    return str(value)


def _parse_cell(kind: type, text: str) -> Any:
    if kind is bool:
        return text == "true"
    if kind is int:
        return int(text)
    if kind is float:
        return float(text)
    if kind is str:
        return text
    return None if text == "" else float(text)


_KINDS: dict[str, type] = {
    "instance": str,
    "formulation": str,
    "status": str,
    "error": str,
    "n": int,
    "m": int,
    "nodes": int,
    "cuts_msi": int,
    "cuts_indegree": int,
    "cuts_blossom": int,
    "lazy": int,
    "root_only": bool,
    "mismatch": bool,
    "time": float,
}


@dataclass
class Report:
    rows: list[ReportRow] = field(default_factory=list)

    @property
    def solved(self) -> int:
        return sum(row.solved for row in self.rows)

    @property
    def root_only(self) -> int:
        return sum(row.root_only for row in self.rows)

    @property
    def failed(self) -> int:
        return sum(row.failed for row in self.rows)

    @property
    def mismatches(self) -> int:
        return sum(row.mismatch for row in self.rows)

    def aggregates(self) -> dict[str, int]:
        return {
            "rows": len(self.rows),
            "solved": self.solved,
            "root_only": self.root_only,
            "failed": self.failed,
            "mismatches": self.mismatches,
        }

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(COLUMNS)
        for row in self.rows:
            values = asdict(row)
            writer.writerow([_cell(values[column]) for column in COLUMNS])
        return buffer.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> Report:
        reader = csv.DictReader(io.StringIO(text))
        if tuple(reader.fieldnames or ()) != COLUMNS:
            raise ValueError(f"unexpected report columns: {reader.fieldnames}")
        rows = []
        for record in reader:
            rows.append(ReportRow(**{c: _parse_cell(_KINDS.get(c, type(None)), record[c]) for c in COLUMNS}))
        return cls(rows)

    def to_json(self) -> str:
        payload = {"rows": [asdict(row) for row in self.rows], "aggregates": self.aggregates()}
        return json.dumps(payload, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> Report:
        payload = json.loads(text)
        names = {f.name for f in fields(ReportRow)}
        return cls([ReportRow(**{k: v for k, v in row.items() if k in names}) for row in payload["rows"]])


@dataclass
class _Task:
    path: Path
    fmt: str
    cfg: SolverConfig
    oracle: bool
    oracle_max_edges: int
    include_times: bool


def _check_oracle(row: ReportRow, value: float) -> None:
    row.oracle = value
    if row.solved:
        row.mismatch = abs(row.lb - value) > DOMINANCE_TOL
    else:
        ub = row.ub if row.ub is not None else math.inf
        row.mismatch = row.lb > value + DOMINANCE_TOL or ub < value - DOMINANCE_TOL


def _run_task(task: _Task) -> ReportRow:
    name = task.path.stem
    try:
        inst = read_instance(task.path, task.fmt)
    except (WcmError, OSError) as e:
        logger.warning("could not read %s: %s", task.path, e)
        return ReportRow(instance=name, formulation=task.cfg.formulation.value, error=str(e))

    try:
        result = solve(inst, task.cfg)
    except WcmError as e:
        logger.warning("solve of %s failed: %s", name, e)
        return ReportRow(instance=name, n=inst.n, m=inst.m, formulation=task.cfg.formulation.value, error=str(e))

    row = ReportRow.from_result(name, inst.n, inst.m, result)
    if not task.include_times:
        row.time = 0.0
    if task.oracle and inst.m <= task.oracle_max_edges:
        value, _ = brute_force_wcm(inst, max_edges=task.oracle_max_edges)
        _check_oracle(row, value)
        if row.mismatch:
            logger.warning("%s (%s): solver %s, oracle %s", name, row.formulation, row.lb, value)
    return row


def run_benchmark(
    paths: Iterable[Path],
    cfg: SolverConfig,
    formulations: Sequence[Formulation] = (Formulation.COMPACT, Formulation.EXPONENTIAL),
    *,
    fmt: str | None = None,
    stp_mode: str = "mwcs",
    oracle: bool = False,
    oracle_max_edges: int = MAX_EDGES,
    workers: int = 1,
    include_times: bool = True,
) -> Report:
    """Solve every file under every formulation.

    Args:
        paths: Instance files; processed in sorted order.
        cfg: Base settings; the formulation is replaced per run.
        formulations: Formulations to run for each file.
        fmt: Format of every file; inferred from the extension when None.
        stp_mode: Format used for ``.stp`` files when inferring.
        oracle: Cross-check each optimum against the brute-force oracle.
        oracle_max_edges: Largest instance the oracle is applied to.
        workers: Worker processes; 1 solves in this process.
        include_times: Record wall-clock times (0 otherwise, for reproducible reports).

    Returns:
        Report with one row per (file, formulation), in input order. Files
        that cannot be read or solved give failed rows; the run continues.
    """
    tasks = [
        _Task(
            path=path,
            fmt=fmt or guess_format(path, stp_mode),
            cfg=replace(cfg, formulation=formulation),
            oracle=oracle,
            oracle_max_edges=oracle_max_edges,
            include_times=include_times,
        )
        for path in sorted(paths)
        for formulation in formulations
    ]

    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_run_task, tasks))
    else:
        rows = [_run_task(task) for task in tasks]

    report = Report(rows)
    logger.info("benchmark finished: %s", report.aggregates())
    return report


@dataclass
class BoundComparison:
    instance: str
    exponential_root: float
    compact_lp: float

    @property
    def dominated(self) -> bool:
        """Exponential root bound is at least as strong as the compact LP bound."""
        return self.exponential_root <= self.compact_lp + DOMINANCE_TOL


def compare_bounds(report: Report) -> list[BoundComparison]:
    """Pair the exponential root bound with the compact LP bound per instance."""
    by_instance: dict[str, dict[str, ReportRow]] = {}
    for row in report.rows:
        if not row.failed:
            by_instance.setdefault(row.instance, {})[row.formulation] = row

    comparisons = []
    for instance, rows in by_instance.items():
        exponential = rows.get(Formulation.EXPONENTIAL.value)
        compact = rows.get(Formulation.COMPACT.value)
        if exponential is None or compact is None:
            continue
        if exponential.root_bound is None or compact.lp_bound is None:
            continue
        comparison = BoundComparison(instance, exponential.root_bound, compact.lp_bound)
        if not comparison.dominated:
            logger.warning(
                "%s: exponential root bound %s exceeds compact LP bound %s",
                instance,
                comparison.exponential_root,
                comparison.compact_lp,
            )
        comparisons.append(comparison)
    return comparisons


def find_instances(directory: Path, pattern: str | None = None) -> list[Path]:
    """Instance files in ``directory`` (``*.wcm`` and ``*.stp`` unless a glob is given)."""
    if pattern:
        return sorted(p for p in directory.glob(pattern) if p.is_file())
    return sorted(p for p in directory.iterdir() if p.is_file() and p.suffix.lower() in (".wcm", ".stp"))
