"""Indegree inequalities ``sum_u (1 - d_u) x(δ(u)) <= 1``."""

from __future__ import annotations

from formulations import FractionalPoint
from graph import Graph
from separation.cut import Cut, CutFamily, IndegreeWitness, indegree_row, make_cut

VIOLATION_TOL = 1e-5


def best_orientation(g: Graph, pt: FractionalPoint) -> list[int]:
    """Indegree vector maximizing the left-hand side at ``pt``.

    Each edge points from the endpoint with the larger value to the smaller
    one; on equal values the lower id is the tail.
    """
    indegree = [0] * g.n
    for u, v in g.edges:
        if pt.val[u] > pt.val[v] or (pt.val[u] == pt.val[v] and u < v):
            indegree[v] += 1
        else:
            indegree[u] += 1
    return indegree


def separate_indegree(g: Graph, pt: FractionalPoint, tol: float = VIOLATION_TOL) -> Cut | None:
    """Most violated indegree inequality, if its violation exceeds ``tol``."""
    indegree = best_orientation(g, pt)
    coefs, rhs = indegree_row(g, indegree)
    cut = make_cut(CutFamily.INDEGREE, coefs, rhs, IndegreeWitness(tuple(indegree)), pt.x)
    return cut if cut.violation > tol else None
