"""Greedy rounding of relaxation points into connected matchings."""

from __future__ import annotations

import numpy as np

from formulations import FractionalPoint
from graph import Matching, is_connected_matching, is_matching
from instance import Instance


def primal_heuristic(pt: FractionalPoint, inst: Instance) -> Matching | None:
    """Grow a connected matching along the edges with the largest ``x_e * w_e``.

    Starts from the best positive candidate, then repeatedly adds the best
    remaining candidate that is vertex-disjoint from the matching and has an
    endpoint adjacent to a covered vertex.

    An integral point whose support is already a connected matching is
    returned unchanged, even when it carries edges of negative weight.

    Returns:
        A connected matching, or None when no candidate edge exists.
    """
    g = inst.graph
    if pt.is_integral():
        support = frozenset(int(e) for e in np.flatnonzero(pt.x > 0.5))
        if support and is_matching(g, support) and is_connected_matching(g, support):
            return support

    score = pt.x * inst.weights
    candidates = sorted(
        (e for e in range(g.m) if score[e] > 0),
        key=lambda e: (-score[e], -inst.weights[e], e),
    )
    if not candidates:
        return None

    first = candidates[0]
    chosen = [first]
    covered = set(g.edges[first])
    remaining = candidates[1:]

    grown = True
    while grown:
        grown = False
        for i, e in enumerate(remaining):
            u, v = g.edges[e]
            if u in covered or v in covered:
                continue
            if any(w in covered for w in (*g.neighbors(u), *g.neighbors(v))):
                chosen.append(e)
                covered.update((u, v))
                del remaining[i]
                grown = True
                break

    matching = frozenset(chosen)
    return matching if is_connected_matching(g, matching) else None
