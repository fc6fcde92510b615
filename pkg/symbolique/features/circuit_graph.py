"""
Circuit graphs.

The vertices are the circuits of a matroid (equivalently the supports of the
minimal generators of its Stanley–Reisner ideal); two circuits are adjacent
when they intersect.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Tuple

import networkx as nx

from symbolique.core.matroid import Matroid
from symbolique.core.subsets import GroundSubset, SubsetFamily, is_subset
from symbolique.exceptions import ParameterOutOfRangeError


@dataclass(frozen=True)
class CircuitGraph:
    vertices: SubsetFamily
    graph: nx.Graph = field(compare=False, repr=False)

    def adjacent(self, i: int, j: int) -> bool:
        return self.graph.has_edge(i, j)

    def __len__(self) -> int:
        return len(self.vertices)


def support_graph(supports: Iterable[GroundSubset]) -> CircuitGraph:
    vertices = tuple(sorted(set(supports)))
    graph = nx.Graph()
    graph.add_nodes_from(range(len(vertices)))
    for i, j in combinations(range(len(vertices)), 2):
        if vertices[i] & vertices[j]:
            graph.add_edge(i, j)
    return CircuitGraph(vertices, graph)


def circuit_graph(matroid: Matroid) -> CircuitGraph:
    return support_graph(matroid.circuits)


def _has_connector(g: CircuitGraph, chosen: Tuple[int, ...]) -> bool:
    union = 0
    for i in chosen:
        union |= g.vertices[i]
    for k in range(len(g.vertices)):
        if k in chosen or not is_subset(g.vertices[k], union):
            continue
        if all(g.adjacent(k, i) for i in chosen):
            return True
    return False


def independent_sets_of_size(g: CircuitGraph, size: int) -> Iterator[Tuple[int, ...]]:
    """Sets of `size` pairwise non-adjacent vertices, as sorted index tuples."""
    if size < 1:
        return
    for clique in nx.enumerate_all_cliques(nx.complement(g.graph)):
        if len(clique) > size:
            return
        if len(clique) == size:
            yield tuple(sorted(clique))


def is_2_locally_connected(g: CircuitGraph) -> bool:
    """
    Every pair of disjoint circuits has a third circuit inside their union
    meeting both.
    """
    return all(_has_connector(g, pair) for pair in independent_sets_of_size(g, 2))


def is_q_locally_star_connected(g: CircuitGraph, q: int) -> bool:
    """
    Every q pairwise disjoint circuits have another circuit inside their union
    meeting each of them.
    """
    if q < 2:
        raise ParameterOutOfRangeError(f"q must be at least 2, got {q}")
    return all(_has_connector(g, chosen) for chosen in independent_sets_of_size(g, q))


def independence_number(g: CircuitGraph) -> int:
    if not g.vertices:
        return 0
    _, weight = nx.max_weight_clique(nx.complement(g.graph), weight=None)
    return weight
