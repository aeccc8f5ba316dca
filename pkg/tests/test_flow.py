"""Tests for max-flow and Gomory-Hu cut trees."""

import itertools
import math
import random

import pytest

from flow import CapDigraph, CutTree, cut_capacity, cut_tree_query, gomory_hu, max_flow
from graph import build_graph


def _brute_force_min_cut(d: CapDigraph, s: int, t: int) -> float:
    others = [u for u in range(d.n) if u not in (s, t)]
    best = math.inf
    for bits in itertools.product((False, True), repeat=len(others)):
        side = {s} | {u for u, keep in zip(others, bits) if keep}
        best = min(best, cut_capacity(d, side))
    return best


def _random_graph(rng: random.Random, n: int):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
    caps = [rng.randint(0, 5) + rng.choice([0.0, 0.5]) for _ in edges]
    return build_graph(n, edges), caps


def _undirected_flow(g, caps, u, v) -> float:
    d = CapDigraph(n=g.n)
    for (a, b), c in zip(g.edges, caps):
        d.add_arc(a, b, c)
        d.add_arc(b, a, c)
    return max_flow(d, u, v)[0]


class TestMaxFlow:
    """Test maximum flow / minimum cut."""

    def test_two_parallel_paths(self):
        """Two disjoint unit paths carry 2."""
        d = CapDigraph(n=4)
        d.add_arc(0, 1, 1)
        d.add_arc(1, 3, 1)
        d.add_arc(0, 2, 1)
        d.add_arc(2, 3, 1)
        value, side = max_flow(d, 0, 3)
        assert value == 2
        assert 0 in side and 3 not in side

    def test_source_without_arcs(self):
        """No outgoing arcs: value 0 and the source alone on its side."""
        d = CapDigraph(n=3)
        d.add_arc(1, 2, 4)
        value, side = max_flow(d, 0, 2)
        assert value == 0
        assert side == frozenset({0})

    def test_infinite_arcs_use_sentinel(self):
        """Infinite arcs never appear in a finite minimum cut."""
        d = CapDigraph(n=3)
        d.add_arc(0, 1, math.inf)
        d.add_arc(1, 2, 3)
        assert max_flow(d, 0, 2)[0] == 3

    def test_parallel_arcs_merge(self):
        """Parallel arcs add up."""
        d = CapDigraph(n=2)
        d.add_arc(0, 1, 1)
        d.add_arc(0, 1, 2.5)
        assert d.capacity(0, 1) == 3.5
        assert max_flow(d, 0, 1)[0] == 3.5

    def test_invalid_arcs(self):
        """Arcs are range- and sign-checked."""
        d = CapDigraph(n=2)
        with pytest.raises(ValueError):
            d.add_arc(0, 2, 1)
        with pytest.raises(ValueError):
            d.add_arc(0, 1, -1)
        with pytest.raises(ValueError):
            max_flow(d, 1, 1)

    def test_random_against_enumeration(self):
        """Random digraphs: value equals the minimum over all s-t partitions."""
        rng = random.Random(11)
        for _ in range(40):
            n = rng.randint(2, 8)
            d = CapDigraph(n=n)
            for u in range(n):
                for v in range(n):
                    if u != v and rng.random() < 0.4:
                        d.add_arc(u, v, rng.randint(1, 5))
            value, side = max_flow(d, 0, n - 1)
            assert value == pytest.approx(_brute_force_min_cut(d, 0, n - 1))
            assert cut_capacity(d, side) == pytest.approx(value)


class TestGomoryHu:
    """Test cut trees."""

    def test_four_cycle(self):
        """Every pair of a unit 4-cycle is 2-connected."""
        g = build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        tree = gomory_hu(g, [1, 1, 1, 1])
        for u, v in itertools.combinations(range(4), 2):
            assert tree.min_cut_value(u, v) == pytest.approx(2)

    def test_star(self):
        """Leaves of a unit star are cut from the centre by 1."""
        g = build_graph(4, [(0, 1), (0, 2), (0, 3)])
        tree = gomory_hu(g, [1, 1, 1])
        for leaf in (1, 2, 3):
            assert tree.min_cut_value(0, leaf) == pytest.approx(1)

    def test_random_all_pairs(self):
        """Tree queries equal direct max-flows, with n - 1 flow calls."""
        rng = random.Random(5)
        for _ in range(50):
            n = rng.randint(2, 8)
            g, caps = _random_graph(rng, n)
            tree = gomory_hu(g, caps)
            assert tree.flow_calls == n - 1
            for u, v in itertools.combinations(range(n), 2):
                assert tree.min_cut_value(u, v) == pytest.approx(_undirected_flow(g, caps, u, v))

    def test_side_is_a_minimum_cut(self):
        """The reported side separates u from v at the reported value."""
        rng = random.Random(8)
        g, caps = _random_graph(rng, 7)
        tree = gomory_hu(g, caps)
        value, side = cut_tree_query(tree, 0, 6)
        assert 0 in side and 6 not in side
        crossing = sum(c for (a, b), c in zip(g.edges, caps) if (a in side) != (b in side))
        assert crossing == pytest.approx(value)

    def test_negative_capacity(self):
        """Capacities must be non-negative."""
        with pytest.raises(ValueError):
            gomory_hu(build_graph(2, [(0, 1)]), [-1])


class TestCutTreeQuery:
    """Test queries on hand-built trees."""

    @pytest.fixture
    def path_tree(self):
        # 0 - 1 - 2 - 3 with edge values 3, 1, 2
        return CutTree(n=4, parent=[-1, 0, 1, 2], value=[0.0, 3.0, 1.0, 2.0])

    def test_minimum_on_path(self, path_tree):
        """The smallest edge on the path wins."""
        value, side = cut_tree_query(path_tree, 0, 3)
        assert value == 1
        assert side == frozenset({0, 1})

    def test_adjacent_nodes(self, path_tree):
        """Adjacent nodes are cut by their edge."""
        assert cut_tree_query(path_tree, 2, 3)[0] == 2

    def test_symmetric(self, path_tree):
        """query(u, v) and query(v, u) agree in value."""
        for u, v in itertools.permutations(range(4), 2):
            assert cut_tree_query(path_tree, u, v)[0] == cut_tree_query(path_tree, v, u)[0]

    def test_same_endpoint(self, path_tree):
        """Endpoints must differ."""
        with pytest.raises(ValueError):
            cut_tree_query(path_tree, 1, 1)

    def test_edges_and_subtree(self, path_tree):
        """Tree edges are listed by child; subtrees hang below them."""
        assert list(path_tree.edges()) == [(1, 0, 3.0), (2, 1, 1.0), (3, 2, 2.0)]
        assert path_tree.subtree(2) == frozenset({2, 3})
