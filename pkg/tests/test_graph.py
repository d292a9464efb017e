import random

import pytest
from hypothesis import given

from neutralgraph.errors import DuplicateEdge, LoopRejected, VertexOutOfRange
from neutralgraph.generators import complete, cycle, path, spider, star
from neutralgraph.graph import EdgeRef, build, is_connected, is_regular, max_degree

from conftest import graphs


def test_build_triangle():
    g = build(3, [(0, 1), (1, 2), (0, 2)])
    assert g.order == 3
    assert g.edges == ((0, 1), (0, 2), (1, 2))
    assert g.degrees == (2, 2, 2)


@pytest.mark.parametrize(
    "order, edges, exc",
    [
        (2, [(0, 1), (1, 0)], DuplicateEdge),
        (4, [(0, 0)], LoopRejected),
        (3, [(0, 3)], VertexOutOfRange),
        (3, [(-1, 2)], VertexOutOfRange),
        (0, [], VertexOutOfRange),
    ],
)
def test_build_rejects(order, edges, exc):
    with pytest.raises(exc):
        build(order, edges)


def test_graph_is_immutable():
    g = path(3)
    with pytest.raises(AttributeError):
        g.order = 5


def test_connectivity_examples():
    assert is_connected(path(4))
    assert not is_connected(build(4, [(0, 1), (2, 3)]))
    assert is_connected(build(1, []))


def test_regularity_examples():
    assert is_regular(cycle(5)) == 2
    assert is_regular(star(3)) is None
    assert is_regular(complete(4)) == 3


def test_max_degree_examples():
    assert max_degree(spider((2, 2, 2))) == (3, 1)
    assert max_degree(cycle(6)) == (2, 6)
    assert max_degree(star(4)) == (4, 1)


def test_has_edge_and_edgeref():
    g = path(4)
    assert g.has_edge(2, 1)
    assert not g.has_edge(0, 3)
    assert EdgeRef(1, 2) in g.edges


@given(graphs())
def test_handshake(g):
    assert sum(g.degrees) == 2 * g.size


@given(graphs(min_order=2))
def test_equality_ignores_input_order(g):
    shuffled = [(v, u) for u, v in g.edges]
    random.Random(g.size).shuffle(shuffled)
    h = build(g.order, shuffled)
    assert h == g
    assert hash(h) == hash(g)
