import math

import networkx as nx
import pytest
from networkx.algorithms.isomorphism import GraphMatcher

from autgadgets.analysis.graphs import girth, graph_automorphisms, incidence_matrix
from autgadgets.errors import CapExceededError
from autgadgets.models.bitmatrix import BitMatrix
from autgadgets.models.graph import (
    GraphAutomorphism,
    SimpleGraph,
    complete,
    complete_bipartite,
    path,
    petersen,
    ring,
)
from autgadgets.models.permutation import Permutation


def test_edges_are_sorted(k4):
    assert k4.edges == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    g = SimpleGraph.from_edges(3, [(2, 1), (1, 0)])
    assert g.edges == ((0, 1), (1, 2))
    assert g.edge_index(2, 1) == 1


def test_invalid_graphs():
    with pytest.raises(ValueError):
        SimpleGraph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        SimpleGraph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        SimpleGraph.from_edges(3, [(0, 5)])


def test_named_graphs():
    assert complete_bipartite(3, 3).name == "K33"
    assert petersen().num_edges == 15
    assert set(petersen().degrees()) == {3}
    assert ring(5).num_edges == 5
    assert not SimpleGraph.from_edges(4, [(0, 1), (2, 3)]).is_connected()
    assert path(4).is_connected()


def test_incidence_matrix(k4):
    assert incidence_matrix(k4) == BitMatrix.from_rows(["111000", "100110", "010101", "001011"])


@pytest.mark.parametrize(
    "graph, expected",
    [(complete(4), 3), (complete_bipartite(3, 3), 4), (petersen(), 5), (ring(7), 7)],
)
def test_girth(graph, expected):
    assert girth(graph) == expected


def test_forest_girth():
    assert girth(path(5)) == math.inf


@pytest.mark.parametrize(
    "graph, order",
    [(complete(4), 24), (complete_bipartite(3, 3), 72), (petersen(), 120), (ring(6), 12)],
)
def test_automorphism_counts(graph, order):
    assert len(graph_automorphisms(graph)) == order


@pytest.mark.parametrize("graph", [complete_bipartite(2, 3), petersen(), ring(8)])
def test_against_networkx(graph):
    g = graph.to_networkx()
    assert len(graph_automorphisms(graph)) == sum(1 for _ in GraphMatcher(g, g).isomorphisms_iter())
    assert girth(graph) == nx.girth(g)


def test_parallel_search_matches_serial():
    serial = graph_automorphisms(petersen(), workers=1)
    threaded = graph_automorphisms(petersen(), workers=4)
    assert [a.vertex_perm for a in serial] == [a.vertex_perm for a in threaded]
    assert serial[0].vertex_perm.is_identity()


def test_vertex_cap():
    with pytest.raises(CapExceededError):
        graph_automorphisms(ring(13), vertex_cap=12)


def test_induced_edge_permutation(k4):
    # vertex swap 1 <-> 2 exchanges edges (0,1)/(0,2) and (1,3)/(2,3)
    aut = GraphAutomorphism.from_vertex_perm(k4, Permutation.from_cycles("(23)", 4))
    assert aut.edge_perm == Permutation.from_cycles("(12)(56)", 6)
    four_cycle = GraphAutomorphism.from_vertex_perm(k4, Permutation.from_cycles("(1234)", 4))
    assert four_cycle.edge_perm == Permutation.from_cycles("(1463)(25)", 6)
    with pytest.raises(ValueError):
        GraphAutomorphism.from_vertex_perm(ring(4), Permutation.from_cycles("(12)", 4))
