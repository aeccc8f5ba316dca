"""Exhaustive reference answers for small inputs.

These enumerate instead of optimizing and are only meant to cross-check the
solver and the separation routines.
"""

from __future__ import annotations

from collections.abc import Iterator
from itertools import combinations

import networkx as nx

from errors import OracleError
from graph import Graph, Matching, induced_components
from instance import Instance

MAX_EDGES = 24
MAX_SEPARATOR_VERTICES = 12
TIE_TOL = 1e-9


def _matchings(g: Graph) -> Iterator[tuple[int, ...]]:
    """All matchings as sorted edge-id tuples, the empty one included."""
    covered = [False] * g.n
    chosen: list[int] = []

    def extend(e: int) -> Iterator[tuple[int, ...]]:
        if e == g.m:
            yield tuple(chosen)
            return
        u, v = g.edges[e]
        if not covered[u] and not covered[v]:
            covered[u] = covered[v] = True
            chosen.append(e)
            yield from extend(e + 1)
            chosen.pop()
            covered[u] = covered[v] = False
        yield from extend(e + 1)

    yield from extend(0)


def _connected(g: Graph, matching: tuple[int, ...]) -> bool:
    return len(induced_components(g, {w for e in matching for w in g.edges[e]})) <= 1


def connected_matchings(g: Graph, max_edges: int = MAX_EDGES) -> Iterator[Matching]:
    """Every connected matching of ``g``.

    Raises:
        OracleError: ``g`` has more than ``max_edges`` edges.
    """
    if g.m > max_edges:
        raise OracleError(f"graph has {g.m} edges; enumeration is limited to {max_edges}")
    for matching in _matchings(g):
        if _connected(g, matching):
            yield frozenset(matching)


def brute_force_wcm(inst: Instance, max_edges: int = MAX_EDGES) -> tuple[float, Matching]:
    """Optimum by enumeration.

    Matchings are enumerated edge by edge, skipping edges whose endpoints are
    already covered; a branch is dropped once even all remaining positive
    weights cannot reach the best value. Ties go to the lexicographically
    smallest edge-id set.

    Raises:
        OracleError: The instance has more than ``max_edges`` edges.
    """
    g = inst.graph
    if g.m > max_edges:
        raise OracleError(f"instance '{inst.name}' has {g.m} edges; the oracle is limited to {max_edges}")

    weights = [float(w) for w in inst.weights]
    tail_gain = [0.0] * (g.m + 1)
    for e in range(g.m - 1, -1, -1):
        tail_gain[e] = tail_gain[e + 1] + max(weights[e], 0.0)

    best_value = 0.0
    best: tuple[int, ...] = ()
    covered = [False] * g.n
    chosen: list[int] = []

    def visit(e: int, value: float) -> None:
        nonlocal best_value, best
        if value + tail_gain[e] < best_value - TIE_TOL:
            return
        if e == g.m:
            candidate = tuple(chosen)
            better = value > best_value + TIE_TOL
            tied = abs(value - best_value) <= TIE_TOL and candidate < best
            if (better or tied) and _connected(g, candidate):
                best_value, best = value, candidate
            return
        u, v = g.edges[e]
        if not covered[u] and not covered[v]:
            covered[u] = covered[v] = True
            chosen.append(e)
            visit(e + 1, value + weights[e])
            chosen.pop()
            covered[u] = covered[v] = False
        visit(e + 1, value)

    visit(0, 0.0)
    return best_value, frozenset(best)


def is_separator(g: Graph, separator: frozenset[int] | set[int], a: int, b: int) -> bool:
    """True iff removing ``separator`` leaves no ``a``-``b`` path."""
    if a in separator or b in separator:
        return False
    view = g.nx_graph.subgraph(v for v in range(g.n) if v not in separator)
    return not nx.has_path(view, a, b)


def is_minimal_separator(g: Graph, separator: frozenset[int], a: int, b: int) -> bool:
    """A separator from which no single vertex can be dropped."""
    return is_separator(g, separator, a, b) and all(
        not is_separator(g, separator - {s}, a, b) for s in separator
    )


def enumerate_minimal_separators(
    g: Graph, a: int, b: int, max_vertices: int = MAX_SEPARATOR_VERTICES
) -> set[frozenset[int]]:
    """All inclusion-minimal ``(a, b)``-separators, by filtering every vertex subset.

    Raises:
        OracleError: ``a`` and ``b`` are equal or adjacent, or ``g`` is too large.
    """
    if a == b:
        raise OracleError("separator endpoints must differ")
    if g.is_adjacent(a, b):
        raise OracleError(f"vertices {a} and {b} are adjacent; no separator exists")
    if g.n > max_vertices:
        raise OracleError(f"graph has {g.n} vertices; enumeration is limited to {max_vertices}")

    others = [u for u in range(g.n) if u not in (a, b)]
    found: set[frozenset[int]] = set()
    for size in range(len(others) + 1):
        for subset in combinations(others, size):
            candidate = frozenset(subset)
            if is_minimal_separator(g, candidate, a, b):
                found.add(candidate)
    return found
