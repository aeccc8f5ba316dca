"""Maximum flow / minimum cut on capacitated digraphs (preflow-push)."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import networkx as nx
from networkx.algorithms.flow import preflow_push


@dataclass
class CapDigraph:
    """Directed graph with non-negative arc capacities.

    Capacities may be ``math.inf``; those are replaced by a finite sentinel
    larger than the sum of all finite capacities when a flow is computed.
    Parallel arcs are allowed and are merged by summing capacities.
    """

    n: int
    arcs: list[tuple[int, int, float]] = field(default_factory=list)
    _cache: nx.DiGraph | None = field(default=None, repr=False, compare=False)

    def add_arc(self, tail: int, head: int, capacity: float) -> int:
        """Append an arc and return its id."""
        if not (0 <= tail < self.n and 0 <= head < self.n):
            raise ValueError(f"arc ({tail}, {head}) outside 0..{self.n - 1}")
        if capacity < 0:
            raise ValueError(f"arc ({tail}, {head}) has negative capacity {capacity}")
        self.arcs.append((tail, head, float(capacity)))
        self._cache = None
        return len(self.arcs) - 1

    def sentinel(self) -> float:
        """Finite stand-in for infinite capacities."""
        return sum(c for _, _, c in self.arcs if math.isfinite(c)) + 1.0

    def capacity(self, tail: int, head: int) -> float:
        """Merged capacity of all ``tail -> head`` arcs (sentinel for infinite)."""
        h = self.to_networkx()
        return h[tail][head]["capacity"] if h.has_edge(tail, head) else 0.0

    def to_networkx(self) -> nx.DiGraph:
        if self._cache is None:
            big = self.sentinel()
            h = nx.DiGraph()
            h.add_nodes_from(range(self.n))
            for tail, head, cap in self.arcs:
                cap = cap if math.isfinite(cap) else big
                if h.has_edge(tail, head):
                    h[tail][head]["capacity"] += cap
                else:
                    h.add_edge(tail, head, capacity=cap)
            self._cache = h
        return self._cache


def cut_capacity(d: CapDigraph, source_side: set[int] | frozenset[int]) -> float:
    """Total capacity of arcs leaving ``source_side``."""
    h = d.to_networkx()
    return sum(
        data["capacity"] for tail, head, data in h.edges(data=True) if tail in source_side and head not in source_side
    )


def max_flow(d: CapDigraph, s: int, t: int) -> tuple[float, frozenset[int]]:
    """Maximum s-t flow value with a minimum cut certificate.

    Args:
        d: Capacitated digraph.
        s: Source node.
        t: Sink node, distinct from ``s``.

    Returns:
        ``(value, source_side)`` where ``source_side`` contains ``s`` but not
        ``t`` and ``value`` is the capacity of the arcs leaving it.
    """
    if s == t:
        raise ValueError("source and sink must differ")

    _, (reachable, _) = nx.minimum_cut(d.to_networkx(), s, t, capacity="capacity", flow_func=preflow_push)
    side = frozenset(reachable)
    return cut_capacity(d, side), side
