"""Minimal separator inequalities.

For non-adjacent ``a, b`` and a minimal ``(a, b)``-separator ``S``::

    x(δ(a)) + x(δ(b)) - sum_{s in S} x(δ(s)) <= 1

Fractional points are separated exactly with max-flows on a vertex-split
support digraph; integral points with a connectivity check. Every separator
found is lifted to an inclusion-minimal one before the row is emitted.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator
from typing import Literal

from errors import SeparationError
from flow import CapDigraph, max_flow
from formulations import FractionalPoint
from graph import Graph, induced_components
from log import get_logger
from separation.cut import Cut, CutFamily, MsiWitness, make_cut, msi_row

logger = get_logger(__name__)

VIOLATION_TOL = 1e-5

Mode = Literal["all", "first"]


def build_msi_support_digraph(g: Graph, pt: FractionalPoint) -> CapDigraph:
    """Vertex-split digraph: ``u_in = 2u``, ``u_out = 2u + 1``.

    ``u_in -> u_out`` has capacity ``val(u)``; each edge ``{u, v}`` gives
    infinite arcs ``u_out -> v_in`` and ``v_out -> u_in``. A flow from
    ``a_out`` to ``b_in`` is bounded by the weight of a vertex separator.
    """
    d = CapDigraph(n=2 * g.n)
    for u in range(g.n):
        d.add_arc(2 * u, 2 * u + 1, float(pt.val[u]))
    for u, v in g.edges:
        d.add_arc(2 * u + 1, 2 * v, math.inf)
        d.add_arc(2 * v + 1, 2 * u, math.inf)
    return d


def _reach(g: Graph, start: int, blocked: list[bool]) -> list[bool]:
    """Vertices reachable from ``start`` without entering a blocked vertex."""
    seen = [False] * g.n
    seen[start] = True
    stack = [start]
    while stack:
        u = stack.pop()
        for v, _ in g.adjacency[u]:
            if not seen[v] and not blocked[v]:
                seen[v] = True
                stack.append(v)
    return seen


def _touching(g: Graph, candidates: Iterable[int], region: list[bool]) -> list[int]:
    return [s for s in candidates if any(region[v] for v, _ in g.adjacency[s])]


def lift_to_minimal_separator(g: Graph, c: Iterable[int], a: int, b: int) -> frozenset[int]:
    """Shrink an ``(a, b)``-separator to an inclusion-minimal subset.

    Keeps the part of ``c`` adjacent to the component of ``a``, then the part
    of that adjacent to the component of ``b``. Both components are then full,
    so every remaining vertex is needed.

    Raises:
        SeparationError: ``a`` or ``b`` lies in ``c``, or ``c`` does not separate them.
    """
    c = sorted(set(c))
    if a == b:
        raise SeparationError(f"separator endpoints must differ, got {a} twice")
    blocked = [False] * g.n
    for s in c:
        blocked[s] = True
    if blocked[a] or blocked[b]:
        raise SeparationError(f"endpoints ({a}, {b}) must not belong to the separator")

    side_a = _reach(g, a, blocked)
    if side_a[b]:
        raise SeparationError(f"vertex set {c} does not separate {a} from {b}")

    near_a = _touching(g, c, side_a)
    blocked = [False] * g.n
    for s in near_a:
        blocked[s] = True
    side_b = _reach(g, b, blocked)
    return frozenset(_touching(g, near_a, side_b))


def _emit(g: Graph, pt: FractionalPoint, a: int, b: int, separator: frozenset[int]) -> Cut:
    coefs, rhs = msi_row(g, a, b, separator)
    return make_cut(CutFamily.MSI, coefs, rhs, MsiWitness(min(a, b), max(a, b), separator), pt.x)


def _candidate_pairs(
    g: Graph, pt: FractionalPoint, members: list[list[int]], unit: list[int], tol: float
) -> Iterator[tuple[int, int]]:
    """Pairs of units whose values sum above one and that share no edge.

    Each unit is represented by its smallest vertex. Pairs come lazily in
    order of decreasing value, so ``"first"`` mode stops early.
    """
    reps = sorted((group[0] for group in members if pt.val[group[0]] > tol), key=lambda u: (-pt.val[u], u))
    for i, a in enumerate(reps):
        if pt.val[a] <= 0.5 + tol / 2:
            return
        near = {unit[v] for u in members[unit[a]] for v in g.neighbors(u)}
        for b in reps[i + 1 :]:
            if pt.val[a] + pt.val[b] <= 1.0 + tol:
                break
            if unit[b] not in near:
                yield a, b


class _ContractedDigraph:
    """Support digraph after contracting vertices with integral values.

    Vertices with value 0 are dropped (they join every separator for free);
    each component of value-1 vertices becomes one unit whose split arc is
    infinite, since cutting it can never produce a violated inequality.
    """

    def __init__(self, g: Graph, pt: FractionalPoint, tol: float):
        self.unit = [-1] * g.n
        self.zero = [u for u in range(g.n) if pt.val[u] <= tol]
        full = [u for u in range(g.n) if pt.val[u] >= 1.0 - tol]

        members: list[list[int]] = []
        for component in induced_components(g, full):
            for u in component:
                self.unit[u] = len(members)
            members.append(component)
        fractional_start = len(members)
        for u in range(g.n):
            if self.unit[u] == -1 and pt.val[u] > tol:
                self.unit[u] = len(members)
                members.append([u])

        self.members = members
        self.digraph = CapDigraph(n=2 * len(members))
        for k, group in enumerate(members):
            cap = math.inf if k < fractional_start else float(pt.val[group[0]])
            self.digraph.add_arc(2 * k, 2 * k + 1, cap)

        linked: set[tuple[int, int]] = set()
        for u, v in g.edges:
            p, q = self.unit[u], self.unit[v]
            if p < 0 or q < 0 or p == q or (p, q) in linked:
                continue
            linked.add((p, q))
            linked.add((q, p))
            self.digraph.add_arc(2 * p + 1, 2 * q, math.inf)
            self.digraph.add_arc(2 * q + 1, 2 * p, math.inf)


def _cut_vertices(side: frozenset[int], members: list[list[int]]) -> list[int]:
    return [u for k, group in enumerate(members) if 2 * k in side and 2 * k + 1 not in side for u in group]


def separate_msi_fractional(
    g: Graph,
    pt: FractionalPoint,
    mode: Mode = "all",
    contract: bool = True,
    tol: float = VIOLATION_TOL,
) -> list[Cut]:
    """Exact separation of minimal separator inequalities at a point.

    Args:
        g: Graph.
        pt: Relaxation point with vertex values.
        mode: ``"all"`` scans every candidate pair; ``"first"`` stops at the
            first violated inequality.
        contract: Contract vertices with value 0 or 1 before the flow runs.
        tol: Minimum violation.

    Returns:
        Violated cuts with minimal separators, deduplicated. With
        contraction a component of value-1 vertices contributes one pair
        end, its smallest vertex. An empty list in ``"all"`` mode certifies
        that no such inequality is violated.
    """
    if float(pt.val.max(initial=0.0)) <= 0.5 + tol / 2:
        return []

    if contract:
        contracted = _ContractedDigraph(g, pt, tol)
        digraph, members, unit = contracted.digraph, contracted.members, contracted.unit
        free = contracted.zero
    else:
        digraph = build_msi_support_digraph(g, pt)
        members = [[u] for u in range(g.n)]
        unit = list(range(g.n))
        free = []

    cuts: list[Cut] = []
    seen: set[tuple] = set()
    checked = 0
    for a, b in _candidate_pairs(g, pt, members, unit, tol):
        checked += 1
        p, q = unit[a], unit[b]
        value, side = max_flow(digraph, 2 * p + 1, 2 * q)
        if value >= pt.val[a] + pt.val[b] - 1.0 - tol:
            continue

        separator = lift_to_minimal_separator(g, _cut_vertices(side, members) + free, a, b)
        cut = _emit(g, pt, a, b, separator)
        if cut.violation <= tol or cut.key() in seen:
            continue
        seen.add(cut.key())
        cuts.append(cut)
        if mode == "first":
            break

    logger.debug("MSI separation checked %d pairs, found %d cuts", checked, len(cuts))
    return cuts


def separate_msi_integer(g: Graph, pt: FractionalPoint, tol: float = 1e-6) -> list[Cut]:
    """Connectivity check of an integral point.

    Returns:
        Empty iff the covered vertices induce a connected subgraph; otherwise
        one cut per component other than the one holding the lowest vertex.

    Raises:
        SeparationError: The point is not integral or violates a degree row.
    """
    if not pt.is_integral(tol):
        raise SeparationError("integer MSI separation needs an integral point")
    if g.n and float(pt.val.max()) > 1.0 + tol:
        raise SeparationError("point covers a vertex more than once")

    components = induced_components(g, pt.covered(tol))
    if len(components) <= 1:
        return []

    anchor = components[0]
    inside = set(anchor)
    boundary = sorted({v for u in anchor for v in g.neighbors(u) if v not in inside})

    cuts = []
    a = anchor[0]
    for component in components[1:]:
        b = component[0]
        separator = lift_to_minimal_separator(g, boundary, a, b)
        cuts.append(_emit(g, pt, a, b, separator))
    return cuts
