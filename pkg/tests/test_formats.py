import random

import networkx as nx
import pytest
from hypothesis import given

from neutralgraph import formats as fm
from neutralgraph.claims import small_corpus
from neutralgraph.errors import DuplicateEdge, LoopRejected, ParseError, VertexOutOfRange
from neutralgraph.generators import cycle, path
from neutralgraph.graph import build

from conftest import graphs


def test_graph6_examples():
    assert fm.graph6_decode("A_") == path(2)
    assert fm.graph6_encode(cycle(3)) == "Bw"
    assert fm.graph6_encode(build(1, [])) == "@"
    assert fm.graph6_decode(">>graph6<<Bw") == cycle(3)
    assert fm.graph6_decode("Bw\n") == cycle(3)


def _nx_graph6(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges)
    return nx.to_graph6_bytes(h, header=False).decode().strip()


def _random_graph(rng, max_order):
    n = rng.randint(1, max_order)
    p = rng.random()
    return build(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def test_graph6_random_against_networkx():
    rng = random.Random(7)
    for _ in range(300):
        g = _random_graph(rng, 62)
        s = fm.graph6_encode(g)
        assert s == _nx_graph6(g)
        assert fm.graph6_decode(s) == g


@pytest.mark.parametrize("n", [63, 64, 130])
def test_graph6_long_header(n):
    edges = {tuple(sorted((i, (i * 7 + 3) % n))) for i in range(n)}
    g = build(n, [e for e in edges if e[0] != e[1]])
    s = fm.graph6_encode(g)
    assert s[0] == "~" and s == _nx_graph6(g)
    assert fm.graph6_decode(s) == g


def test_graph6_corpus_round_trip():
    for g in small_corpus():
        assert fm.graph6_decode(fm.graph6_encode(g)) == g


@pytest.mark.parametrize("bad", ["", "B", "Bx", "B\x7f", "Bw?", "~?", "Ao", "?"])
def test_graph6_rejects(bad):
    with pytest.raises(ParseError):
        fm.graph6_decode(bad)


@given(graphs(max_order=9))
def test_edge_list_round_trip(g):
    assert fm.edge_list_parse(fm.edge_list_emit(g)) == g
    assert fm.parse_graph_text(fm.edge_list_emit(g)) == [g]


def test_edge_list_comments_and_order():
    text = "# triangle\n3 3\n\n2 1\n0 2  # back edge\n0 1\n"
    assert fm.edge_list_parse(text) == cycle(3)


@pytest.mark.parametrize(
    "text,exc,line",
    [
        ("3 2\n0 1\n1 1\n", LoopRejected, 3),
        ("3 2\n0 1\n1 0\n", DuplicateEdge, 3),
        ("3 2\n0 1\n# c\n1 5\n", VertexOutOfRange, 4),
        ("3 2\n0 1\n", ParseError, 1),
        ("3 1\n0 x\n", ParseError, 2),
        ("three\n", ParseError, 1),
    ],
)
def test_edge_list_errors(text, exc, line):
    with pytest.raises(exc) as info:
        fm.edge_list_parse(text)
    assert str(info.value).startswith(f"line {line}:")


def test_dot():
    out = fm.dot_emit(path(3))
    lines = out.splitlines()
    assert lines[0] == "graph G {" and lines[-1] == "}"
    assert "  0 -- 1;" in lines and "  1 -- 2;" in lines
    assert sum(1 for ln in lines if "--" in ln) == 2


def test_parse_graph_text_graph6_lines():
    gs = fm.parse_graph_text("Bw\n# comment\nCF\n")
    assert gs[0] == cycle(3) and gs[1].order == 4
    with pytest.raises(ParseError):
        fm.parse_graph_text("\n# nothing\n")


def test_emit_formats():
    g = cycle(3)
    assert fm.emit(g, "g6") == "Bw\n"
    assert fm.emit(g, "edges").startswith("3 3\n")
    assert fm.emit(g, "dot").startswith("graph G {")
    with pytest.raises(ValueError):
        fm.emit(g, "xml")


def test_report_serialization_stable():
    doc = {"b": 1, "a": [1, 2]}
    assert fm.dumps_report(doc) == '{\n  "b": 1,\n  "a": [\n    1,\n    2\n  ]\n}\n'
