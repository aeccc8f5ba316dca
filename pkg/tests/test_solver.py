"""Tests for the branch-and-cut search."""

import logging
import math
import time

import pytest

from config import get_default_config
from errors import GraphError
from formats import Gaussian, generate_gnp
from formulations import build_exponential_base, vertex_values
from graph import is_connected_matching, matching_weight
from oracle import brute_force_wcm
from separation import BlossomSeparator, CutFamily
from solver import (
    Formulation,
    SolverConfig,
    SolveStatus,
    gap,
    primal_heuristic,
    root_cut_round,
    solve,
    strengthen_root,
)

BOTH = [Formulation.EXPONENTIAL, Formulation.COMPACT]


def _check_against_oracle(inst, formulation, **settings):
    result = solve(inst, SolverConfig(formulation=formulation, **settings))
    expected, _ = brute_force_wcm(inst, max_edges=64)
    assert result.status is SolveStatus.OPTIMAL, inst.name
    assert result.lb == pytest.approx(expected, abs=1e-6), inst.name
    assert is_connected_matching(inst.graph, result.matching)
    assert matching_weight(inst.weights, result.matching) == pytest.approx(result.lb)


class TestSmallInstances:
    """Hand-checked optima."""

    @pytest.mark.parametrize("formulation", BOTH)
    def test_path(self, path6, formulation):
        """Unit P6 takes every other edge."""
        result = solve(path6, SolverConfig(formulation=formulation))
        assert result.status is SolveStatus.OPTIMAL
        assert result.lb == pytest.approx(3.0)
        assert result.matching == frozenset({0, 2, 4})
        assert result.gap == 0.0

    @pytest.mark.parametrize("formulation", BOTH)
    def test_triangle(self, k3, formulation):
        """Unit K3 has optimum 1."""
        result = solve(k3, SolverConfig(formulation=formulation))
        assert result.lb == pytest.approx(1.0)
        assert len(result.matching) == 1

    @pytest.mark.parametrize("formulation", BOTH)
    def test_two_disjoint_edges(self, two_k2, formulation):
        """Only one of two disconnected edges can be taken."""
        result = solve(two_k2, SolverConfig(formulation=formulation))
        assert result.status is SolveStatus.OPTIMAL
        assert result.lb == pytest.approx(1.0)
        assert len(result.matching) == 1

    @pytest.mark.parametrize("formulation", BOTH)
    def test_single_edge(self, make_instance, formulation):
        """K2 with weight 5 is solved at the root."""
        result = solve(make_instance(2, [(0, 1)], [5.0]), SolverConfig(formulation=formulation))
        assert result.status is SolveStatus.OPTIMAL
        assert result.lb == result.ub == pytest.approx(5.0)
        assert result.matching == frozenset({0})
        assert result.root_only

    @pytest.mark.parametrize("formulation", BOTH)
    def test_all_negative(self, make_instance, formulation):
        """Negative weights leave the empty matching."""
        inst = make_instance(3, [(0, 1), (0, 2), (1, 2)], [-1.0, -2.0, -0.5])
        result = solve(inst, SolverConfig(formulation=formulation))
        assert result.status is SolveStatus.OPTIMAL
        assert result.lb == 0.0
        assert result.matching == frozenset()
        assert result.root_only

    def test_empty_graph(self, make_instance):
        """No vertices is trivially optimal."""
        result = solve(make_instance(0, []))
        assert result.status is SolveStatus.OPTIMAL
        assert result.lb == result.ub == 0.0

    @pytest.mark.parametrize("formulation", BOTH)
    def test_no_edges(self, make_instance, formulation):
        """Vertices without edges: the empty matching is optimal with value 0."""
        result = solve(make_instance(4, []), SolverConfig(formulation=formulation))
        assert result.status is SolveStatus.OPTIMAL
        assert result.lb == result.ub == 0.0
        assert result.status.solved
        assert result.matching == frozenset()
        assert result.nodes == 1


class TestRoot:
    """Test root strengthening."""

    def test_triangle_blossom(self, k3):
        """One blossom takes K3 from 1.5 to 1."""
        model, _ = build_exponential_base(k3)
        _, stats = strengthen_root(k3, model, SolverConfig())
        assert stats.lp_bound == pytest.approx(1.5)
        assert stats.root_bound == pytest.approx(1.0)
        assert stats.cuts[CutFamily.BLOSSOM] == 1
        assert stats.cuts[CutFamily.MSI] == 0
        assert stats.cuts[CutFamily.INDEGREE] == 0
        assert stats.rounds == 1
        assert stats.integral_connected

    def test_triangle_solved_at_root(self, k3):
        """K3 needs a single blossom and no branching."""
        result = solve(k3)
        assert result.status is SolveStatus.OPTIMAL
        assert result.cuts == {CutFamily.MSI: 0, CutFamily.BLOSSOM: 1, CutFamily.INDEGREE: 0}
        assert result.nodes == 1
        assert result.lazy == 0

    def test_connected_optimum_stops(self, path6):
        """An integral connected LP optimum ends the loop without cuts."""
        model, _ = build_exponential_base(path6)
        _, stats = strengthen_root(path6, model, SolverConfig())
        assert stats.integral_connected
        assert stats.rounds == 0
        assert stats.root_bound == pytest.approx(3.0)

    def test_disconnected_point_gets_msi(self, path6):
        """x = (1,0,0,0,1) on P6 is cut by separator inequalities."""
        pt = vertex_values([1, 0, 0, 0, 1], path6.graph)
        cuts = root_cut_round(path6, pt, SolverConfig(), BlossomSeparator(path6.graph))
        assert cuts
        assert all(cut.family is CutFamily.MSI for cut in cuts)

    def test_root_reported_in_result(self, k3):
        """The exponential model reports LP and root bounds."""
        result = solve(k3)
        assert result.lp_bound == pytest.approx(1.5)
        assert result.root_bound == pytest.approx(1.0)
        assert result.root is not None
        assert result.cuts[CutFamily.BLOSSOM] >= 1


class TestLimits:
    """Test time and node limits."""

    @pytest.mark.parametrize("formulation", BOTH)
    def test_time_limit(self, path6, formulation):
        """A near-zero time limit returns the empty matching and an open gap."""
        result = solve(path6, SolverConfig(formulation=formulation, time_limit=1e-9, primal_heuristic=False))
        assert result.status is SolveStatus.TIME_LIMIT
        assert result.lb == 0.0
        assert result.matching == frozenset()
        assert result.ub >= 3.0 - 1e-6
        assert result.gap > 0

    def test_node_limit(self, random_instances):
        """The node count never exceeds the limit."""
        for inst in random_instances(10, seed=2, n_min=6, n_max=10):
            result = solve(inst, SolverConfig(node_limit=1))
            assert result.nodes <= 1
            assert result.status in (SolveStatus.OPTIMAL, SolveStatus.NODE_LIMIT)
            assert result.lb <= result.ub + 1e-9

    def test_gap(self):
        """Gap is relative to max(1, |UB|)."""
        assert gap(3.0, 3.0) == 0.0
        assert gap(1.0, 2.0) == pytest.approx(0.5)
        assert gap(0.0, 0.5) == pytest.approx(0.5)
        assert math.isinf(gap(0.0, math.inf))


class TestIncumbents:
    """Test warm starts and the rounding heuristic."""

    def test_warm_start(self, path6):
        """A warm start is accepted as the first incumbent."""
        result = solve(path6, incumbent=frozenset({0, 2, 4}))
        assert result.lb == pytest.approx(3.0)

    def test_bad_warm_start(self, path6):
        """Disconnected or overlapping warm starts are rejected."""
        with pytest.raises(GraphError):
            solve(path6, incumbent=frozenset({0, 1}))
        with pytest.raises(GraphError):
            solve(path6, incumbent=frozenset({0, 4}))

    def test_heuristic_rounds_integral_point(self, path6):
        """An integral connected point is returned as is."""
        pt = vertex_values([1, 0, 1, 0, 1], path6.graph)
        assert primal_heuristic(pt, path6) == frozenset({0, 2, 4})

    def test_heuristic_keeps_connected_support(self, make_instance):
        """An integral connected point survives even with a negative edge in it."""
        inst = make_instance(4, [(0, 1), (1, 2), (2, 3)], [2.0, 1.0, -0.5])
        pt = vertex_values([1, 0, 1], inst.graph)
        assert primal_heuristic(pt, inst) == frozenset({0, 2})

    def test_heuristic_rounds_disconnected_integral_point(self, path6):
        """A disconnected integral support is grown greedily instead."""
        pt = vertex_values([1, 0, 0, 0, 1], path6.graph)
        assert primal_heuristic(pt, path6) == frozenset({0})

    def test_heuristic_without_candidates(self, path6):
        """x = 0 gives nothing."""
        assert primal_heuristic(vertex_values([0] * 5, path6.graph), path6) is None

    def test_heuristic_stays_connected(self, two_k2):
        """The second component is never attached."""
        pt = vertex_values([1, 1], two_k2.graph)
        assert primal_heuristic(pt, two_k2) == frozenset({0})


class TestSettings:
    """Test solver settings."""

    def test_from_config(self):
        """Config sections and overrides are merged; None overrides are ignored."""
        cfg = SolverConfig.from_config(get_default_config(), time_limit=5.0, seed=None)
        assert cfg.time_limit == 5.0
        assert cfg.seed == 0
        assert cfg.formulation is Formulation.EXPONENTIAL
        assert cfg.dump_dir is None
        assert cfg.root_cap_s == pytest.approx(0.5)

    def test_formulation_from_string(self):
        """Formulation names convert to the enum."""
        assert SolverConfig(formulation="compact").formulation is Formulation.COMPACT

    def test_invalid(self):
        """Non-positive limits are rejected."""
        with pytest.raises(ValueError):
            SolverConfig(time_limit=0)
        with pytest.raises(ValueError):
            SolverConfig(formulation="dual")


class TestEvents:
    """Test the structured event stream."""

    def test_events(self, k3, caplog):
        """Root rounds, nodes and the final summary are logged with elapsed times."""
        caplog.set_level(logging.INFO, logger="wcm")
        solve(k3)
        events = [r.event for r in caplog.records if hasattr(r, "event")]
        assert "root_round" in events
        assert "node" in events
        assert "incumbent" in events
        assert events[-1] == "done"
        assert all("elapsed" in r.fields for r in caplog.records if hasattr(r, "event"))

    @pytest.mark.parametrize("formulation", BOTH)
    def test_dual_bound_never_rises(self, random_instances, caplog, formulation):
        """The global bound on node events is non-increasing and never below the optimum."""
        caplog.set_level(logging.INFO, logger="wcm")
        for inst in random_instances(15, seed=23, n_min=6, n_max=10):
            if inst.m == 0:
                continue
            caplog.clear()
            solve(inst, SolverConfig(formulation=formulation, primal_heuristic=False))
            expected, _ = brute_force_wcm(inst, max_edges=64)
            trace = [r.fields["ub"] for r in caplog.records if getattr(r, "event", None) == "node"]
            assert trace, inst.name
            for before, after in zip(trace, trace[1:]):
                assert after <= before + 1e-6 * max(1.0, abs(before)), inst.name
            assert min(trace) >= expected - 1e-6, inst.name

    def test_deterministic(self, random_instances):
        """Repeated solves take the same path."""
        for inst in random_instances(5, seed=4, n_min=6, n_max=9):
            first, second = solve(inst), solve(inst)
            assert first.matching == second.matching
            assert first.nodes == second.nodes
            assert first.cuts == second.cuts


class TestAgainstOracle:
    """Optimal values equal exhaustive enumeration."""

    @pytest.mark.parametrize("formulation", BOTH)
    def test_random_quick(self, random_instances, formulation):
        for inst in random_instances(20, seed=1):
            _check_against_oracle(inst, formulation)

    def test_compact_without_arc_opening(self, random_instances):
        for inst in random_instances(10, seed=6):
            _check_against_oracle(inst, Formulation.COMPACT, arc_opening=False)

    def test_without_contraction(self, random_instances):
        for inst in random_instances(10, seed=7):
            _check_against_oracle(inst, Formulation.EXPONENTIAL, contract_integral=False)

    @pytest.mark.slow
    @pytest.mark.parametrize("formulation", BOTH)
    def test_random_exhaustive(self, random_instances, formulation):
        for inst in random_instances(200, seed=1000, n_min=2, n_max=10):
            _check_against_oracle(inst, formulation)

    @pytest.mark.slow
    def test_large_sparse_gnp(self):
        """G(10000, 0.01) with Gaussian weights solves to optimality within a minute."""
        inst = generate_gnp(10000, 0.01, Gaussian(0.0, 1.0), seed=1)
        began = time.perf_counter()
        result = solve(inst, SolverConfig(formulation=Formulation.EXPONENTIAL))
        elapsed = time.perf_counter() - began
        assert result.status is SolveStatus.OPTIMAL
        assert result.gap == 0.0
        assert is_connected_matching(inst.graph, result.matching)
        assert elapsed < 60.0
