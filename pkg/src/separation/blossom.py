"""Blossom inequalities ``x(E(H)) <= (|H| - 1) / 2`` for odd handles ``H``.

Exact separation is an odd minimum cut search: an extra vertex ``n`` joins every
vertex ``v`` with capacity ``1 - val(v)``; a handle is violated iff the odd
cut it defines has capacity below 1, and a Gomory-Hu tree of that support
graph contains a minimum odd cut among its fundamental cuts.
"""

from __future__ import annotations

import networkx as nx

from flow import CutTree, gomory_hu_network
from formulations import FractionalPoint
from graph import Graph
from log import get_logger
from separation.cut import BlossomWitness, Cut, CutFamily, blossom_row, make_cut

logger = get_logger(__name__)

VIOLATION_TOL = 1e-5


class BlossomSeparator:
    """Support graph of one graph, built once and recapacitated per point."""

    def __init__(self, g: Graph):
        self.g = g
        self.extra = g.n
        self.support = nx.Graph()
        self.support.add_nodes_from(range(g.n + 1))
        self.support.add_edges_from((u, v, {"capacity": 0.0}) for u, v in g.edges)
        self.support.add_edges_from((v, self.extra, {"capacity": 0.0}) for v in range(g.n))
        self.last_tree: CutTree | None = None

    def recapacitate(self, pt: FractionalPoint) -> None:
        for e, (u, v) in enumerate(self.g.edges):
            self.support[u][v]["capacity"] = float(pt.x[e])
        for v in range(self.g.n):
            self.support[v][self.extra]["capacity"] = max(0.0, 1.0 - float(pt.val[v]))

    def _is_odd(self, v: int) -> bool:
        return v != self.extra or self.g.n % 2 == 1

    def separate(self, pt: FractionalPoint, tol: float = VIOLATION_TOL) -> list[Cut]:
        """All violated blossoms read off the fundamental cuts of the cut tree."""
        if self.g.n < 3:
            return []
        self.recapacitate(pt)
        tree = gomory_hu_network(self.support)
        self.last_tree = tree

        everything = frozenset(range(self.g.n + 1))
        cuts: list[Cut] = []
        seen: set[frozenset[int]] = set()
        for child, _, _ in tree.edges():
            below = tree.subtree(child)
            if sum(1 for v in below if self._is_odd(v)) % 2 == 0:
                continue
            handle = everything - below if self.extra in below else below
            if len(handle) < 3 or handle in seen:
                continue
            seen.add(handle)
            cut = _blossom_cut(self.g, pt, handle)
            if cut.violation > tol:
                cuts.append(cut)

        logger.debug("exact blossom separation found %d cuts", len(cuts))
        return cuts


def _blossom_cut(g: Graph, pt: FractionalPoint, handle: frozenset[int]) -> Cut:
    coefs, rhs = blossom_row(g, handle)
    return make_cut(CutFamily.BLOSSOM, coefs, rhs, BlossomWitness(handle), pt.x)


def separate_blossom_exact(
    g: Graph,
    pt: FractionalPoint,
    separator: BlossomSeparator | None = None,
    tol: float = VIOLATION_TOL,
) -> list[Cut]:
    """Exact blossom separation; an empty result certifies no violated blossom."""
    return (separator or BlossomSeparator(g)).separate(pt, tol)


def separate_blossom_heuristic(
    g: Graph,
    pt: FractionalPoint,
    tol: float = VIOLATION_TOL,
    integrality_tol: float = 1e-6,
) -> list[Cut]:
    """Check the odd components of the subgraph of fractional edges."""
    fractional = pt.fractional_edges(integrality_tol)
    if not fractional:
        return []

    support = nx.Graph()
    support.add_edges_from(g.edges[e] for e in fractional)
    cuts = []
    for component in sorted((sorted(c) for c in nx.connected_components(support)), key=lambda c: c[0]):
        if len(component) % 2 == 0 or len(component) < 3:
            continue
        cut = _blossom_cut(g, pt, frozenset(component))
        if cut.violation > tol:
            cuts.append(cut)
    return cuts
