from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given

from neutralgraph.assortativity import (
    DISASSORTATIVE,
    NEUTRAL,
    UNDEFINED_REGULAR,
    classify,
    lemma1_condition,
    pearson_rational,
    stats,
)
from neutralgraph.enumeration import connected_graphs, nonisomorphic_connected
from neutralgraph.errors import Disconnected, EmptyEdgeSet
from neutralgraph.generators import cycle, path, spider, star
from neutralgraph.graph import build, is_cycle, is_regular, is_tree, max_degree

from conftest import connected_graphs as connected_strategy, graphs


def edge_sums(edges):
    """Independent oracle: recount degrees from the raw edge list."""
    deg = {}
    for u, v in edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    m = len(edges)
    P = sum(deg[u] * deg[v] for u, v in edges)
    S = sum(deg[u] + deg[v] for u, v in edges)
    Q = sum(deg[u] ** 2 + deg[v] ** 2 for u, v in edges)
    return m, P, S, Q, 4 * m * P - S * S, 2 * m * Q - S * S


@pytest.mark.parametrize(
    "g, expected",
    [
        # P4 edges carry degree pairs (1,2), (2,2), (2,1)
        (path(4), (3, 8, 10, 18, -4, 8)),
        # K_{1,3}: three (3,1) edges
        (star(3), (3, 9, 12, 30, -36, 36)),
    ],
)
def test_stats_examples(g, expected):
    assert edge_sums(g.edges) == expected
    st = stats(g)
    assert (st.m, st.P, st.S, st.Q, st.N, st.D) == expected


def test_cycle_is_zero_over_zero():
    st = stats(cycle(4))
    assert (st.N, st.D) == (0, 0)
    assert st.r is None


def test_empty_edge_set():
    with pytest.raises(EmptyEdgeSet):
        stats(build(3, []))
    with pytest.raises(EmptyEdgeSet):
        classify(build(1, []))


def test_classify_examples():
    c = classify(spider((2, 2, 2)))
    assert c.tag == NEUTRAL and c.r == 0
    st = stats(spider((2, 2, 2)))
    assert (st.N, st.D) == (0, 72)
    assert classify(star(3)).r == Fraction(-1)
    assert classify(star(3)).tag == DISASSORTATIVE
    assert classify(cycle(7)).tag == UNDEFINED_REGULAR
    assert classify(cycle(7)).r is None


def test_lemma1_examples():
    # spider(1,1,3): S = 9 + 1 + 1 + 4 + 4 + 1 = 20 = 4 * 5
    assert lemma1_condition(spider((1, 1, 3)))
    assert lemma1_condition(cycle(5))
    assert not lemma1_condition(path(4))
    with pytest.raises(Disconnected):
        lemma1_condition(build(4, [(0, 1), (2, 3)]))


@given(graphs(max_order=10))
def test_power_sum_identity(g):
    if not g.edges:
        return
    st = stats(g)
    assert st.S == sum(d**2 for d in g.degrees)
    assert st.Q == sum(d**3 for d in g.degrees)
    assert edge_sums(g.edges)[:4] == (st.m, st.P, st.S, st.Q)


@given(graphs(max_order=10))
def test_denominator_nonnegative_and_zero_iff_regular(g):
    if not g.edges:
        return
    # isolated vertices make an edge-regular graph irregular as a whole;
    # the denominator only sees endpoint degrees
    st = stats(g)
    assert st.D >= 0
    endpoint_degrees = {g.degrees[v] for e in g.edges for v in e}
    assert (st.D == 0) == (len(endpoint_degrees) == 1)


@given(connected_strategy(max_order=12))
def test_integer_form_matches_fraction_form(g):
    st = stats(g)
    assert pearson_rational(g) == st.r
    assert (st.D == 0) == (is_regular(g) is not None)


@given(connected_strategy(max_order=12))
def test_matches_networkx_float(g):
    r = classify(g).r
    if r is None:
        return
    h = nx.Graph(list(g.edges))
    assert float(r) == pytest.approx(nx.degree_assortativity_coefficient(h), abs=1e-9)


def test_sign_tracks_numerator():
    for g in connected_graphs(5):
        c, st = classify(g), stats(g)
        if c.r is not None:
            assert (c.r > 0) == (st.N > 0) and (c.r < 0) == (st.N < 0)


def _lemma1_shape(g):
    return is_cycle(g) or (is_tree(g) and max_degree(g) == (3, 1))


def test_lemma1_exact_up_to_order_7():
    checked = 0
    for n in range(2, 6):
        for g in connected_graphs(n):
            assert lemma1_condition(g) == _lemma1_shape(g)
            checked += 1
    for n in (6, 7):
        for g in nonisomorphic_connected(n):
            assert lemma1_condition(g) == _lemma1_shape(g)
            checked += 1
    assert checked == 1 + 4 + 38 + 728 + 112 + 853
