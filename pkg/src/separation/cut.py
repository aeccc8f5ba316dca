"""Valid inequalities over the edge variables and their witnesses."""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum

from graph import Graph
from lp import LpRow, Sense


class CutFamily(Enum):
    MSI = "msi"
    INDEGREE = "indegree"
    BLOSSOM = "blossom"


@dataclass(frozen=True)
class MsiWitness:
    a: int
    b: int
    separator: frozenset[int]


@dataclass(frozen=True)
class IndegreeWitness:
    indegree: tuple[int, ...]


@dataclass(frozen=True)
class BlossomWitness:
    handle: frozenset[int]


Witness = MsiWitness | IndegreeWitness | BlossomWitness


@dataclass
class Cut:
    """``sum(coefs[e] * x_e) <= rhs`` over edge ids, violated by ``violation``."""

    family: CutFamily
    coefs: dict[int, float]
    rhs: float
    violation: float
    witness: Witness

    def lhs(self, x) -> float:
        return math.fsum(c * float(x[e]) for e, c in self.coefs.items())

    def to_row(self, var_of_edge: list[int] | None = None) -> LpRow:
        """LP row; ``var_of_edge`` maps edge ids to model variables (identity if None)."""
        if var_of_edge is None:
            coefs = dict(self.coefs)
        else:
            coefs = {var_of_edge[e]: c for e, c in self.coefs.items()}
        return LpRow(coefs, Sense.LE, self.rhs, self.family.value)

    def key(self) -> tuple:
        """Deduplication key; two cuts with equal keys are the same inequality."""
        if isinstance(self.witness, MsiWitness):
            return (self.family.value, tuple(sorted(self.coefs.items())))
        return (self.family.value, self.witness)


def _add_star(coefs: dict[int, float], g: Graph, u: int, coef: float) -> None:
    for e in g.incident(u):
        coefs[e] = coefs.get(e, 0.0) + coef


def _drop_zeros(coefs: dict[int, float]) -> dict[int, float]:
    return {e: c for e, c in coefs.items() if c != 0.0}


def msi_row(g: Graph, a: int, b: int, separator: Iterable[int]) -> tuple[dict[int, float], float]:
    """``x(δ(a)) + x(δ(b)) - sum_{s in S} x(δ(s)) <= 1``."""
    coefs: dict[int, float] = {}
    _add_star(coefs, g, a, 1.0)
    _add_star(coefs, g, b, 1.0)
    for s in separator:
        _add_star(coefs, g, s, -1.0)
    return _drop_zeros(coefs), 1.0


def indegree_row(g: Graph, indegree: Iterable[int]) -> tuple[dict[int, float], float]:
    """``sum_u (1 - d_u) x(δ(u)) <= 1``."""
    coefs: dict[int, float] = {}
    for u, d in enumerate(indegree):
        if d != 1:
            _add_star(coefs, g, u, 1.0 - d)
    return _drop_zeros(coefs), 1.0


def blossom_row(g: Graph, handle: Iterable[int]) -> tuple[dict[int, float], float]:
    """``x(E(H)) <= (|H| - 1) / 2``."""
    inside = set(handle)
    coefs = {e: 1.0 for e, (u, v) in enumerate(g.edges) if u in inside and v in inside}
    return coefs, (len(inside) - 1) / 2.0


def make_cut(family: CutFamily, coefs: dict[int, float], rhs: float, witness: Witness, x) -> Cut:
    cut = Cut(family=family, coefs=coefs, rhs=rhs, violation=0.0, witness=witness)
    cut.violation = cut.lhs(x) - rhs
    return cut
