"""LP relaxations of the two WCM formulations and the vertex-value projection.

The compact model routes a single commodity from an artificial source ``s``
through an arborescence on the covered vertices. The exponential model starts
from the degree rows only; minimal separator, indegree and blossom rows are
added later by the separation routines.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from graph import Graph
from instance import Instance
from lp import LpModel, LpRow, LpSolution, Sense, add_row


@dataclass
class CompactVarMap:
    """Variable ids of the compact model.

    Arc ``2k`` is ``u -> v`` and arc ``2k + 1`` is ``v -> u`` for edge
    ``k = (u, v)``; arc ``2m + u`` is ``s -> u``.
    """

    x: list[int]
    y: list[int]
    f: list[int]
    s: int
    arcs: list[tuple[int, int]] = field(default_factory=list)

    def source_arc(self, u: int) -> int:
        return len(self.x) * 2 + u


def compact_arcs(g: Graph) -> list[tuple[int, int]]:
    """Arcs of the flow network: both orientations of each edge, then ``s -> u``."""
    arcs: list[tuple[int, int]] = []
    for u, v in g.edges:
        arcs.append((u, v))
        arcs.append((v, u))
    arcs.extend((g.n, u) for u in range(g.n))
    return arcs


def build_compact(inst: Instance, arc_opening: bool = True) -> tuple[LpModel, CompactVarMap]:
    """Build the compact single-commodity flow formulation.

    Args:
        inst: Instance.
        arc_opening: Include the (implied) rows that only open an out arc of
            ``u`` when some arc enters ``u``.

    Returns:
        The model and its variable map. ``x`` and ``y`` are flagged integer,
        ``f`` is continuous; the flow big-M is ``n``.
    """
    g = inst.graph
    n, m = g.n, g.m
    model = LpModel(name=f"compact-{inst.name}" if inst.name else "compact")
    arcs = compact_arcs(g)

    x = [model.add_var(0.0, 1.0, float(inst.weights[e]), f"x{e}", integer=True) for e in range(m)]
    y = [model.add_var(0.0, 1.0, 0.0, f"y{a}", integer=True) for a in range(len(arcs))]
    f = [model.add_var(0.0, float("inf"), 0.0, f"f{a}") for a in range(len(arcs))]

    into: list[list[int]] = [[] for _ in range(n)]
    out_of: list[list[int]] = [[] for _ in range(n)]
    for a, (tail, head) in enumerate(arcs):
        into[head].append(a)
        if tail < n:
            out_of[tail].append(a)

    for u in range(n):
        add_row(model, LpRow({x[e]: 1.0 for e in g.incident(u)}, Sense.LE, 1.0, f"degree_{u}"))

    for u in range(n):
        coefs = {y[a]: 1.0 for a in into[u]}
        coefs.update({x[e]: -1.0 for e in g.incident(u)})
        add_row(model, LpRow(coefs, Sense.EQ, 0.0, f"link_{u}"))

    add_row(model, LpRow({y[2 * m + u]: 1.0 for u in range(n)}, Sense.LE, 1.0, "source"))

    if arc_opening:
        for u in range(n):
            for a in out_of[u]:
                coefs = {y[b]: -1.0 for b in into[u]}
                coefs[y[a]] = 1.0
                add_row(model, LpRow(coefs, Sense.LE, 0.0, f"open_{a}"))

    for a in range(len(arcs)):
        add_row(model, LpRow({f[a]: 1.0, y[a]: -float(n)}, Sense.LE, 0.0, f"capacity_{a}"))

    coefs = {f[2 * m + u]: 1.0 for u in range(n)}
    coefs.update({x[e]: -2.0 for e in range(m)})
    add_row(model, LpRow(coefs, Sense.EQ, 0.0, "supply"))

    for u in range(n):
        coefs: dict[int, float] = {}
        for a in into[u]:
            coefs[f[a]] = coefs.get(f[a], 0.0) + 1.0
            coefs[y[a]] = coefs.get(y[a], 0.0) - 1.0
        for a in out_of[u]:
            coefs[f[a]] = coefs.get(f[a], 0.0) - 1.0
        add_row(model, LpRow(coefs, Sense.EQ, 0.0, f"balance_{u}"))

    return model, CompactVarMap(x=x, y=y, f=f, s=n, arcs=arcs)


def build_exponential_base(inst: Instance) -> tuple[LpModel, list[int]]:
    """Degree rows only, ``0 <= x <= 1``; one variable per edge."""
    g = inst.graph
    model = LpModel(name=f"exponential-{inst.name}" if inst.name else "exponential")
    x = [model.add_var(0.0, 1.0, float(inst.weights[e]), f"x{e}", integer=True) for e in range(g.m)]
    for u in range(g.n):
        add_row(model, LpRow({x[e]: 1.0 for e in g.incident(u)}, Sense.LE, 1.0, f"degree_{u}"))
    return model, x


@dataclass
class FractionalPoint:
    """Edge values ``x*`` with the projected vertex values ``val(u) = x*(δ(u))``."""

    x: np.ndarray
    val: np.ndarray

    def is_integral(self, tol: float = 1e-6) -> bool:
        return bool(np.all(np.abs(self.x - np.round(self.x)) <= tol))

    def fractional_edges(self, tol: float = 1e-6) -> list[int]:
        return [int(e) for e in np.flatnonzero((self.x > tol) & (self.x < 1.0 - tol))]

    def covered(self, tol: float = 1e-6) -> list[int]:
        """Vertices with value 1 (within ``tol``)."""
        return [int(u) for u in np.flatnonzero(self.val >= 1.0 - tol)]


def vertex_values(point, g: Graph) -> FractionalPoint:
    """Project an edge vector onto vertices; entries are clipped to [0, 1]."""
    x = np.clip(np.asarray(point, dtype=np.float64), 0.0, 1.0)
    if x.shape != (g.m,):
        raise ValueError(f"expected {g.m} edge values, got {x.shape}")
    val = np.zeros(g.n)
    if g.m:
        ends = np.asarray(g.edges, dtype=np.int64)
        np.add.at(val, ends[:, 0], x)
        np.add.at(val, ends[:, 1], x)
    return FractionalPoint(x=x, val=val)


def compact_x_values(sol: LpSolution, varmap: CompactVarMap) -> np.ndarray:
    """The x-part of a compact-model solution."""
    return np.asarray(sol.x[varmap.x], dtype=np.float64)
