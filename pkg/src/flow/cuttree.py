"""Gomory-Hu cut trees (Gusfield's method, n - 1 max-flow computations)."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

import networkx as nx
from networkx.algorithms.flow import preflow_push

from graph import Graph


@dataclass
class CutTree:
    """Spanning tree over vertices ``0..n-1`` rooted at 0.

    ``parent[u]`` is the tree neighbour of ``u`` towards the root (-1 for the
    root) and ``value[u]`` the minimum cut value of the edge ``(u, parent[u])``.
    The component of ``u`` after deleting that edge is ``subtree(u)``.
    """

    n: int
    parent: list[int]
    value: list[float]
    flow_calls: int = 0
    _children: list[list[int]] = field(default_factory=list, repr=False)

    def __post_init__(self) -> None:
        self._children = [[] for _ in range(self.n)]
        for u, p in enumerate(self.parent):
            if p >= 0:
                self._children[p].append(u)

    def edges(self) -> Iterator[tuple[int, int, float]]:
        """Yield ``(child, parent, value)`` for every tree edge."""
        for u, p in enumerate(self.parent):
            if p >= 0:
                yield u, p, self.value[u]

    def subtree(self, u: int) -> frozenset[int]:
        """Vertices below ``u`` (inclusive)."""
        nodes = [u]
        stack = [u]
        while stack:
            for c in self._children[stack.pop()]:
                nodes.append(c)
                stack.append(c)
        return frozenset(nodes)

    def path_to_root(self, u: int) -> list[int]:
        path = [u]
        while self.parent[path[-1]] >= 0:
            path.append(self.parent[path[-1]])
        return path

    def min_cut_value(self, u: int, v: int) -> float:
        return cut_tree_query(self, u, v)[0]


def _counting_flow(counter: list[int]):
    def flow_func(*args, **kwargs):
        counter[0] += 1
        return preflow_push(*args, **kwargs)

    return flow_func


def gomory_hu_network(h: nx.Graph) -> CutTree:
    """Cut tree of an undirected networkx graph with ``capacity`` edge data.

    Nodes must be ``0..n-1``.
    """
    n = h.number_of_nodes()
    if n <= 1:
        return CutTree(n=n, parent=[-1] * n, value=[0.0] * n)

    calls = [0]
    tree = nx.gomory_hu_tree(h, capacity="capacity", flow_func=_counting_flow(calls))

    parent = [-1] * n
    value = [0.0] * n
    for v, u in nx.bfs_predecessors(tree, 0):
        parent[v] = u
        value[v] = float(tree[u][v]["weight"])

    return CutTree(n=n, parent=parent, value=value, flow_calls=calls[0])


def gomory_hu(g: Graph, cap: Sequence[float]) -> CutTree:
    """Gomory-Hu cut tree of ``g`` under per-edge capacities.

    Args:
        g: Undirected graph.
        cap: Non-negative capacity per edge id.

    Returns:
        Cut tree; for every pair the minimum edge value on the tree path equals
        the pair's minimum cut. Exactly ``n - 1`` max-flow calls are made.
    """
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    for e, (u, v) in enumerate(g.edges):
        if cap[e] < 0:
            raise ValueError(f"edge {e} has negative capacity {cap[e]}")
        h.add_edge(u, v, capacity=float(cap[e]))
    return gomory_hu_network(h)


def cut_tree_query(t: CutTree, u: int, v: int) -> tuple[float, frozenset[int]]:
    """Minimum u-v cut read off the tree.

    Returns:
        ``(value, side)`` where ``value`` is the smallest edge value on the
        tree path and ``side`` the component of ``u`` once that edge is removed.
    """
    if u == v:
        raise ValueError("query endpoints must differ")

    up_u = t.path_to_root(u)
    up_v = t.path_to_root(v)
    on_v_path = set(up_v)
    lca = next(x for x in up_u if x in on_v_path)

    # Tree edges are identified by their child endpoint.
    path_edges = up_u[: up_u.index(lca)] + up_v[: up_v.index(lca)]
    best = min(path_edges, key=lambda c: (t.value[c], c))

    below = t.subtree(best)
    side = below if u in below else frozenset(range(t.n)) - below
    return t.value[best], side
