"""Tests for the exhaustive reference answers."""

import pytest

from errors import OracleError
from graph import build_graph
from oracle import (
    brute_force_wcm,
    connected_matchings,
    enumerate_minimal_separators,
    is_minimal_separator,
    is_separator,
)

C4 = [(0, 1), (1, 2), (2, 3), (0, 3)]


class TestBruteForce:
    """Test the exhaustive optimum."""

    def test_single_edge(self, make_instance):
        """K2 with weight 5."""
        assert brute_force_wcm(make_instance(2, [(0, 1)], [5.0])) == (5.0, frozenset({0}))

    def test_path(self, path6):
        """Unit P6 takes edges 0, 2 and 4."""
        assert brute_force_wcm(path6) == (3.0, frozenset({0, 2, 4}))

    def test_disconnected_pair(self, two_k2):
        """Ties go to the lexicographically smallest set."""
        assert brute_force_wcm(two_k2) == (1.0, frozenset({0}))

    def test_negative(self, make_instance):
        """All-negative weights give the empty matching."""
        assert brute_force_wcm(make_instance(3, [(0, 1), (1, 2)], [-1.0, -3.0])) == (0.0, frozenset())

    def test_too_large(self, make_instance):
        """The edge cap is enforced."""
        edges = [(u, v) for u in range(8) for v in range(u + 1, 8)]
        with pytest.raises(OracleError, match="limited to 24"):
            brute_force_wcm(make_instance(8, edges))

    def test_connected_matchings(self, path6):
        """P6 has 1 empty, 5 single-edge, 3 two-edge and 1 three-edge connected matchings."""
        found = list(connected_matchings(path6.graph))
        assert len(found) == 10
        assert frozenset({0, 2}) in found
        assert frozenset({0, 3}) not in found


class TestSeparators:
    """Test minimal separator enumeration."""

    def test_path(self):
        """Each inner vertex between 1 and 4 separates them."""
        g = build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)])
        assert enumerate_minimal_separators(g, 1, 4) == {frozenset({2}), frozenset({3})}

    def test_cycle(self):
        """Opposite vertices of C4 need both others."""
        g = build_graph(4, C4)
        assert enumerate_minimal_separators(g, 0, 2) == {frozenset({1, 3})}

    def test_disconnected(self):
        """Vertices in different components are separated by the empty set."""
        g = build_graph(4, [(0, 1), (2, 3)])
        assert enumerate_minimal_separators(g, 0, 2) == {frozenset()}

    def test_adjacent(self):
        """Adjacent vertices have no separator."""
        with pytest.raises(OracleError, match="adjacent"):
            enumerate_minimal_separators(build_graph(4, C4), 0, 1)

    def test_too_large(self):
        """The vertex cap is enforced."""
        with pytest.raises(OracleError):
            enumerate_minimal_separators(build_graph(13, [(0, 1)]), 0, 5)

    def test_predicates(self):
        """{1, 2, 3} separates 0 from 4 on P5 but is not minimal."""
        g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
        assert is_separator(g, frozenset({1, 2, 3}), 0, 4)
        assert not is_minimal_separator(g, frozenset({1, 2, 3}), 0, 4)
        assert is_minimal_separator(g, frozenset({2}), 0, 4)
        assert not is_separator(g, frozenset({0}), 0, 4)
