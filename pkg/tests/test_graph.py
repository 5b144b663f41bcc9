import json

import numpy as np
import pytest

from mergedsub.errors import GraphError, ParameterError
from mergedsub.graph import (
    Graph,
    adjacency,
    complement,
    complete,
    cycle,
    degree,
    empty,
    from_adjacency,
    incidence,
    is_regular,
    laplacian,
    line_graph,
    make_family,
    petersen,
    rook,
    shrikhande,
    signless_laplacian,
    star,
)
from mergedsub.numeric import eigenvalues_of


def test_cycle_edge_order_is_traversal():
    assert make_family("cycle", 4).edges == ((0, 1), (1, 2), (2, 3), (0, 3))


@pytest.mark.parametrize(
    "name, params, order, size",
    [
        ("complete", (5,), 5, 10),
        ("path", (4,), 4, 3),
        ("complete_bipartite", (2, 3), 5, 6),
        ("star", (3,), 4, 3),
        ("empty", (3,), 3, 0),
        ("t_copies_of_star", (3,), 9, 6),
        ("petersen", (), 10, 15),
    ],
)
def test_family_sizes(name, params, order, size):
    g = make_family(name, *params)
    assert (g.order, g.size) == (order, size)


def test_unknown_family():
    with pytest.raises(ParameterError, match="known"):
        make_family("hypercube", 3)


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 1), (1, 0)], [(0, 3)]])
def test_invalid_graphs(edges):
    with pytest.raises(GraphError):
        Graph(3, tuple(edges))


def test_json_round_trip_keeps_order_and_orientation():
    g = Graph(4, ((2, 1), (0, 3), (1, 0)))
    assert Graph.from_json(json.loads(json.dumps(g.to_json()))) == g


def test_matrix_relations():
    g = petersen()
    B = incidence(g)
    assert (B.sum(axis=0) == 2).all()
    assert np.array_equal(signless_laplacian(g), B @ B.T)
    assert np.array_equal(laplacian(g), degree(g) - adjacency(g))
    assert not adjacency(g).flags.writeable


def test_line_graph_and_complement():
    assert line_graph(star(3)).same_edges(complete(3))
    assert complement(complement(cycle(5))).same_edges(cycle(5))
    assert complement(cycle(5)).size == 5
    with pytest.raises(GraphError):
        line_graph(empty(3))


def test_regularity():
    assert is_regular(petersen()) == 3
    assert is_regular(star(3)) is None
    assert is_regular(empty(4)) == 0


def test_from_adjacency_round_trip():
    g = cycle(6)
    assert from_adjacency(adjacency(g)).same_edges(g)


def test_rook_and_shrikhande_are_cospectral_but_different():
    a, b = rook(), shrikhande()
    assert is_regular(a) == is_regular(b) == 6
    assert np.allclose(eigenvalues_of(a), eigenvalues_of(b))
    # a vertex neighborhood is 2K_3 in the rook's graph and C_6 in the Shrikhande graph
    def local_triangles(g):
        A = adjacency(g)
        nbrs = np.flatnonzero(A[0])
        sub = A[np.ix_(nbrs, nbrs)].astype(float)
        return np.trace(sub @ sub @ sub)

    assert local_triangles(a) == 12 and local_triangles(b) == 0
