"""Graph parsing and the Q_n(G) relation families."""

import pytest

from koszul_lab.errors import GraphFormatError, ParseError
from koszul_lab.presentations import (
    Graph, graph_generators, load_graph, parse_graph, qn_graph_presentation, relation_family_counts,
)
from koszul_lab.quadratic import same_relation_space


def test_parse_text_graph():
    graph = parse_graph("n=4; 1-2 2-3 3-4")
    assert graph.vertex_count == 4
    assert graph.sorted_edges() == [(1, 2), (2, 3), (3, 4)]
    assert graph.describe() == "n=4; 1-2 2-3 3-4"


def test_parse_normalizes_edge_direction():
    graph = parse_graph("n=3; 2-1, 3-2")
    assert graph.sorted_edges() == [(1, 2), (2, 3)]
    assert graph.has_edge(2, 1)
    assert not graph.has_edge(1, 3)


def test_parse_json_graph():
    graph = parse_graph('{"n": 3, "edges": [[1, 2], [1, 3], [2, 3]]}')
    assert graph == Graph.complete(3)


def test_edgeless_graph():
    graph = parse_graph("n=2;")
    assert graph.edges == frozenset()
    assert graph.describe() == "n=2;"


@pytest.mark.parametrize("text", [
    "n=3; 1-2 2-1",
    "n=3; 1-1",
    "n=3; 1-4",
    "vertices=3; 1-2",
    "n=3; 1_2",
    '{"edges": [[1, 2]]}',
    '{"n": 3, "edges": [[1, 2, 3]]}',
    '{"n": 3,',
])
def test_malformed_graphs(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_graph_errors_are_parse_errors():
    assert issubclass(GraphFormatError, ParseError)


def test_load_graph(tmp_path):
    path = tmp_path / "path.graph"
    path.write_text("n=3; 1-2 2-3\n")
    assert load_graph(path).sorted_edges() == [(1, 2), (2, 3)]


def test_generators_of_complete_graph():
    gens = graph_generators(Graph.complete(3))
    assert [g.label for g in gens] == ["u(1)", "u(2)", "u(3)", "u(12)", "u(13)", "u(23)"]
    assert [g.weight for g in gens] == [1, 1, 1, 2, 2, 2]
    assert gens[3].aliases == ("u(1,2)",)


def test_generators_skip_missing_edges():
    gens = graph_generators(parse_graph("n=3; 1-3"))
    assert [g.label for g in gens] == ["u(1)", "u(2)", "u(3)", "u(13)"]


@pytest.mark.parametrize("graph, expected", [
    (Graph.complete(3), {"i": 3, "ii": 6, "iii": 0}),
    (Graph.complete(4), {"i": 6, "ii": 24, "iii": 6}),
    (Graph(2, frozenset()), {"i": 1, "ii": 0, "iii": 0}),
])
def test_relation_family_counts(graph, expected):
    assert relation_family_counts(graph) == expected


def test_complete_graph_on_three_vertices_is_k3(k3):
    presentation = qn_graph_presentation(Graph.complete(3))
    assert len(presentation.relations) == 5
    assert presentation.name == "qn-graph(n=3; 1-2 1-3 2-3)"
    assert same_relation_space(presentation, k3)


def test_edgeless_graph_is_commutative():
    presentation = qn_graph_presentation(Graph(2, frozenset()), name="pair")
    assert presentation.name == "pair"
    assert len(presentation.relations) == 1
    assert presentation.relation_span().dim == 1
