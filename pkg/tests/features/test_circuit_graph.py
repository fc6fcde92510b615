"""Tests for circuit graphs and their local connectivity."""

import pytest

from symbolique.core.matroid import direct_sum, uniform_matroid
from symbolique.exceptions import ParameterOutOfRangeError
from symbolique.features.circuit_graph import (
    circuit_graph,
    independence_number,
    independent_sets_of_size,
    is_2_locally_connected,
    is_q_locally_star_connected,
    support_graph,
)
from tests.conftest import family


class TestGraph:
    """Tests for building circuit graphs."""

    def test_adjacency(self, running):
        g = circuit_graph(running)
        assert len(g) == 4
        af, cd = g.vertices.index(0b100001), g.vertices.index(0b001100)
        assert not g.adjacent(af, cd)

    def test_independent_pairs(self):
        g = support_graph(family((0, 1), (2, 3), (1, 2)))
        # Vertices are sorted as masks: {0,1}, {1,2}, {2,3}
        assert list(independent_sets_of_size(g, 2)) == [(0, 2)]

    def test_independence_number(self):
        assert independence_number(support_graph(family((0, 1), (2, 3), (4, 5)))) == 3
        assert independence_number(support_graph([])) == 0


class TestLocalConnectivity:
    """Tests for 2-local and q-local star connectivity."""

    def test_uniform(self):
        assert is_2_locally_connected(circuit_graph(uniform_matroid(4, 1)))
        assert is_2_locally_connected(circuit_graph(uniform_matroid(5, 2)))

    def test_two_disjoint_circuits(self):
        m = direct_sum(uniform_matroid(2, 1), uniform_matroid(2, 1))
        assert not is_2_locally_connected(circuit_graph(m))

    def test_paving(self, paving6):
        assert is_2_locally_connected(circuit_graph(paving6))

    def test_cocircuits_of_paving(self, paving6):
        assert not is_2_locally_connected(circuit_graph(paving6.dual()))

    def test_q_two_matches(self, corpus):
        for m in corpus:
            g = circuit_graph(m)
            assert is_q_locally_star_connected(g, 2) == is_2_locally_connected(g)

    def test_q_three(self):
        # Three disjoint pairs with no circuit meeting all three inside their union
        m = direct_sum(
            direct_sum(uniform_matroid(2, 1), uniform_matroid(2, 1)), uniform_matroid(2, 1)
        )
        assert not is_q_locally_star_connected(circuit_graph(m), 3)
        assert is_q_locally_star_connected(circuit_graph(uniform_matroid(6, 2)), 3)

    def test_q_range(self, running):
        with pytest.raises(ParameterOutOfRangeError):
            is_q_locally_star_connected(circuit_graph(running), 1)
