"""Tests for the compact and exponential models."""

import numpy as np
import pytest

from formulations import build_compact, build_exponential_base, compact_x_values, vertex_values
from lp import set_bounds, solve_lp
from oracle import connected_matchings

INT_TOL = 1e-6


def _integral_y_feasible(model, y_vars):
    """Depth-first search over fractional y for an all-integral y point."""
    sol = solve_lp(model)
    if not sol.optimal:
        return False
    for j in y_vars:
        if INT_TOL < sol.x[j] < 1.0 - INT_TOL:
            for value in (1.0, 0.0):
                branch = model.copy()
                set_bounds(branch, j, value, value)
                if _integral_y_feasible(branch, y_vars):
                    return True
            return False
    return True


class TestCompact:
    """Test the single-commodity flow model."""

    def test_sizes(self, path6):
        """x per edge, y and f per arc; rows as listed in the model docs."""
        n, m = path6.n, path6.m
        model, varmap = build_compact(path6)
        assert len(varmap.x) == m
        assert len(varmap.y) == len(varmap.f) == 2 * m + n
        assert model.num_vars == 5 * m + 2 * n
        assert model.row_count == 4 * n + 4 * m + 2

    def test_without_arc_opening(self, path6):
        """Dropping the arc-opening rows removes 2m rows."""
        model, _ = build_compact(path6, arc_opening=False)
        assert model.row_count == 4 * path6.n + 2 * path6.m + 2

    def test_arcs(self, make_instance):
        """Arc 2k is u->v, arc 2k+1 is v->u, arc 2m+u leaves the source."""
        _, varmap = build_compact(make_instance(3, [(0, 1), (1, 2)]))
        assert varmap.arcs == [(0, 1), (1, 0), (1, 2), (2, 1), (3, 0), (3, 1), (3, 2)]
        assert varmap.source_arc(2) == 6
        assert varmap.s == 3

    def test_integrality_flags(self, k3):
        """x and y are integer, f continuous."""
        model, varmap = build_compact(k3)
        assert set(model.integer_vars) == set(varmap.x) | set(varmap.y)

    def test_k2_relaxation(self, make_instance):
        """K2 with w = 5 has relaxation optimum 5."""
        inst = make_instance(2, [(0, 1)], [5.0])
        model, varmap = build_compact(inst)
        sol = solve_lp(model)
        assert sol.objective == pytest.approx(5.0)
        assert compact_x_values(sol, varmap) == pytest.approx([1.0])

    def test_all_negative(self, make_instance):
        """Negative weights give a zero optimum."""
        inst = make_instance(3, [(0, 1), (1, 2)], [-1.0, -2.0])
        model, _ = build_compact(inst)
        assert solve_lp(model).objective == pytest.approx(0.0)


class TestCompactIntegralPoints:
    """The integral points of the compact model are the connected matchings."""

    GRAPHS = [
        (5, [(0, 1), (1, 2), (2, 3), (3, 4)]),
        (5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]),
        (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        (6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5)]),
        (6, [(0, 1), (2, 3), (4, 5), (1, 2)]),
        (6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)]),
    ]

    @pytest.mark.parametrize("n, edges", GRAPHS)
    def test_every_x_vector(self, make_instance, n, edges):
        """An integral x extends to an integral (x, y, f) iff it is a connected matching."""
        inst = make_instance(n, edges)
        model, varmap = build_compact(inst)
        expected = set(connected_matchings(inst.graph))
        for mask in range(1 << inst.m):
            chosen = frozenset(e for e in range(inst.m) if mask >> e & 1)
            fixed = model.copy()
            for e, var in enumerate(varmap.x):
                value = 1.0 if e in chosen else 0.0
                set_bounds(fixed, var, value, value)
            assert _integral_y_feasible(fixed, varmap.y) == (chosen in expected), sorted(chosen)


class TestExponentialBase:
    """Test the degree-row model."""

    def test_triangle_half_integral(self, k3):
        """K3 unit weights has optimum 1.5."""
        model, x_vars = build_exponential_base(k3)
        sol = solve_lp(model)
        assert sol.objective == pytest.approx(1.5)
        assert sol.x[x_vars] == pytest.approx([0.5, 0.5, 0.5])

    def test_k2(self, make_instance):
        """K2 with w = 5 gives 5."""
        model, _ = build_exponential_base(make_instance(2, [(0, 1)], [5.0]))
        assert solve_lp(model).objective == pytest.approx(5.0)

    def test_empty_graph(self, make_instance):
        """No edges, no variables, optimum 0."""
        model, x_vars = build_exponential_base(make_instance(3, []))
        assert x_vars == []
        assert solve_lp(model).objective == 0.0


class TestVertexValues:
    """Test the projection onto vertices."""

    def test_triangle(self, k3):
        """Half on each triangle edge gives value 1 per vertex."""
        pt = vertex_values([0.5, 0.5, 0.5], k3.graph)
        assert pt.val.tolist() == [1.0, 1.0, 1.0]
        assert not pt.is_integral()
        assert pt.fractional_edges() == [0, 1, 2]

    def test_perfect_matching_on_p4(self, make_instance):
        """x = (1, 0, 1) on P4 covers every vertex."""
        g = make_instance(4, [(0, 1), (1, 2), (2, 3)]).graph
        pt = vertex_values([1, 0, 1], g)
        assert pt.val.tolist() == [1.0, 1.0, 1.0, 1.0]
        assert pt.is_integral()
        assert pt.covered() == [0, 1, 2, 3]

    def test_zero(self, path6):
        """x = 0 gives value 0."""
        pt = vertex_values(np.zeros(5), path6.graph)
        assert not pt.val.any()

    def test_clipped(self, path6):
        """Entries are clipped into [0, 1]."""
        pt = vertex_values([1.0000001, -1e-9, 0, 0, 0], path6.graph)
        assert pt.x[0] == 1.0 and pt.x[1] == 0.0

    def test_wrong_length(self, path6):
        """One value per edge is required."""
        with pytest.raises(ValueError):
            vertex_values([1, 0], path6.graph)
