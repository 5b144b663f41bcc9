import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mergedsub.constructions import (
    NAMED_OPS,
    MergedTriple,
    merged_laplacian_blocks,
    merged_subdivision,
    named_op,
    named_triple,
    subdivision,
    total_graph,
)
from mergedsub.errors import GraphError, OrderMismatchError, ParameterError
from mergedsub.graph import Graph, complete, cycle, empty, laplacian, line_graph, path, star
from mergedsub.numeric import eigenvalues_of


@st.composite
def graphs(draw, n=None, min_order=1):
    n = draw(st.integers(min_order, 7)) if n is None else n
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, tuple(chosen))


@st.composite
def triples(draw):
    g = draw(graphs(min_order=2).filter(lambda g: g.size > 0))
    return MergedTriple(g, draw(graphs(n=g.order)), draw(graphs(n=g.size)))


@settings(max_examples=60, deadline=None)
@given(triples())
def test_counts_and_block_laplacian(t):
    out = merged_subdivision(t)
    n, m = t.g.order, t.g.size
    assert out.order == n + m
    assert out.size == 2 * m + t.h1.size + t.h2.size
    assert np.array_equal(merged_laplacian_blocks(t).assemble(), laplacian(out))


def test_subdivision_of_c4_is_c8():
    s = subdivision(cycle(4))
    assert s.order == 8 and s.edges[:2] == ((0, 4), (1, 4))
    assert np.allclose(eigenvalues_of(s), eigenvalues_of(cycle(8)))


def test_total_graph_of_path_counts():
    t = total_graph(path(3))
    # 3 vertices + 2 edge vertices; edges: 4 subdivision + 2 original + 1 line-graph edge
    assert (t.order, t.size) == (5, 7)


def test_overlay_is_q_graph_with_h():
    g = cycle(5)
    t = named_triple("overlay", g, complete(5))
    assert t.h2.same_edges(line_graph(g))
    with pytest.raises(ParameterError):
        named_triple("overlay", g)


def test_unknown_op_lists_names():
    with pytest.raises(ParameterError) as exc:
        named_op("corona", cycle(4))
    for name in NAMED_OPS:
        assert name in str(exc.value)


def test_order_mismatch():
    with pytest.raises(OrderMismatchError):
        MergedTriple(cycle(4), empty(3), empty(4))
    with pytest.raises(OrderMismatchError):
        MergedTriple(cycle(4), empty(4), empty(3))
    with pytest.raises(GraphError):
        MergedTriple(empty(3), empty(3), empty(1))


def test_star_construction_matches_path_five():
    out = merged_subdivision(MergedTriple(star(2), empty(3), empty(2)))
    assert np.allclose(eigenvalues_of(out), eigenvalues_of(path(5)))
