"""Undirected simple graphs, matchings and induced connectivity.

Vertices are dense ids ``0..n-1`` and edges dense ids ``0..m-1`` in input
order; every LP model and cut addresses variables by these edge ids.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property
from typing import TypeAlias

import networkx as nx

from errors import GraphError

Matching: TypeAlias = frozenset[int]


@dataclass(frozen=True)
class Graph:
    """Immutable undirected graph without loops or parallel edges."""

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[tuple[int, int], ...], ...] = field(repr=False)
    _index: dict[tuple[int, int], int] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def neighbors(self, u: int) -> list[int]:
        return [v for v, _ in self.adjacency[u]]

    def incident(self, u: int) -> list[int]:
        """Edge ids of δ(u)."""
        return [e for _, e in self.adjacency[u]]

    def edge_id(self, u: int, v: int) -> int | None:
        return self._index.get((min(u, v), max(u, v)))

    def is_adjacent(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._index

    def to_networkx(self) -> nx.Graph:
        """Return an `nx.Graph` with all vertices and an ``id`` attribute per edge."""
        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        h.add_edges_from((u, v, {"id": e}) for e, (u, v) in enumerate(self.edges))
        return h

    @cached_property
    def nx_graph(self) -> nx.Graph:
        """Shared networkx copy built on first use; treat it as read-only."""
        return self.to_networkx()


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph with stable edge ids in input order.

    Args:
        n: Vertex count.
        edge_list: Pairs ``(u, v)``; stored as ``(min, max)``.

    Returns:
        The graph.

    Raises:
        GraphError: On self-loops, duplicate pairs or out-of-range endpoints.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")

    edges: list[tuple[int, int]] = []
    index: dict[tuple[int, int], int] = {}
    adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n)]

    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        key = (min(u, v), max(u, v))
        if key in index:
            raise GraphError(f"duplicate edge ({u}, {v})")
        e = len(edges)
        index[key] = e
        edges.append(key)
        adjacency[key[0]].append((key[1], e))
        adjacency[key[1]].append((key[0], e))

    return Graph(
        n=n,
        edges=tuple(edges),
        adjacency=tuple(tuple(adj) for adj in adjacency),
        _index=index,
    )


def is_matching(g: Graph, edges: Iterable[int]) -> bool:
    """True iff no vertex is covered twice by the given edge ids."""
    seen: set[int] = set()
    for e in edges:
        if not 0 <= e < g.m:
            raise GraphError(f"edge id {e} out of range 0..{g.m - 1}")
        u, v = g.edges[e]
        if u in seen or v in seen:
            return False
        seen.add(u)
        seen.add(v)
    return True


def covered_vertices(g: Graph, matching: Iterable[int]) -> set[int]:
    """Endpoints of the matching edges."""
    covered: set[int] = set()
    for e in matching:
        covered.update(g.edges[e])
    return covered


def induced_components(g: Graph, vertices: Iterable[int]) -> list[list[int]]:
    """Connected components of G[vertices], each sorted, ordered by smallest vertex."""
    view = g.nx_graph.subgraph(set(vertices))
    return sorted((sorted(c) for c in nx.connected_components(view)), key=lambda c: c[0])


def is_connected_matching(g: Graph, matching: Iterable[int]) -> bool:
    """True iff the vertices covered by the matching induce a connected subgraph.

    The empty matching counts as connected.
    """
    return len(induced_components(g, covered_vertices(g, matching))) <= 1


def matching_weight(weights, matching: Iterable[int]) -> float:
    """Total weight of the given edge ids."""
    return float(sum(weights[e] for e in sorted(matching)))
