import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from worked_examples import REL_A, REL_CLOSURE, FIXTURES
from semipath.automata import TransitionTable
from semipath.errors import DuplicateEdge, ParseError, UnknownLetter, UnknownState, UnknownVertex
from semipath.graphio import (
    Edge,
    GraphDocument,
    MatrixReport,
    parse_graph,
    parse_transition_table,
    render,
)
from semipath.semiring import UNREACHABLE


def test_relation_edge_list():
    doc = parse_graph(b"5\n1 2\n2 3\n2 4\n3 4\n5 2\n")
    assert doc.vertices == ("1", "2", "3", "4", "5")
    assert doc.adjacency() == REL_A
    assert parse_graph((FIXTURES / "relation.txt").read_bytes()).adjacency() == REL_A


def test_single_vertex():
    doc = parse_graph("1\n")
    assert doc.vertices == ("1",) and doc.edges == ()


def test_duplicate_edge():
    with pytest.raises(DuplicateEdge) as info:
        parse_graph("2\n1 2\n1 2\n")
    assert info.value.line == 3


def test_named_vertices_comments_and_weights():
    doc = parse_graph("# hello\n\nvertices: a, b,c\na b 3\nb c\n  # indented comment\nc a -2\n")
    assert doc.vertices == ("a", "b", "c")
    assert doc.edges == (Edge("a", "b", 3), Edge("b", "c", None), Edge("c", "a", -2))
    assert isinstance(doc.edges[0].weight, int)


def test_mixed_weights_become_float():
    doc = parse_graph("2\n1 2 1\n2 1 0.5\n")
    assert [type(e.weight) for e in doc.edges] == [float, float]


@pytest.mark.parametrize(
    "text, error, line",
    [
        ("", ParseError, 1),
        ("# only a comment\n", ParseError, 1),
        ("x\n", ParseError, 1),
        ("0\n", ParseError, 1),
        ("2\n1\n", ParseError, 2),
        ("2\n1 2 3 4\n", ParseError, 2),
        ("2\n1 2 abc\n", ParseError, 2),
        ("2\n1 2 inf\n", ParseError, 2),
        ("2\n1 3\n", UnknownVertex, 2),
        ("vertices: a,a\n", ParseError, 1),
        ("vertices: a,,b\n", ParseError, 1),
    ],
)
def test_edge_list_errors(text, error, line):
    with pytest.raises(error) as info:
        parse_graph(text, "edge-list")
    assert info.value.line == line


def test_invalid_utf8():
    with pytest.raises(ParseError):
        parse_graph(b"\xff\xfe")


def test_json_graph():
    doc = parse_graph('{"vertices": ["x", "y"], "edges": [{"from": "x", "to": "y", "weight": 2.5}]}')
    assert doc == GraphDocument(("x", "y"), (Edge("x", "y", 2.5),))


@pytest.mark.parametrize(
    "text, error",
    [
        ("{", ParseError),
        ("[]", ParseError),
        ('{"vertices": "ab"}', ParseError),
        ('{"vertices": []}', ParseError),
        ('{"vertices": ["a"], "edges": [{"from": "a"}]}', ParseError),
        ('{"vertices": ["a"], "edges": [{"from": "a", "to": "b"}]}', UnknownVertex),
        ('{"vertices": ["a", "b"], "edges": [{"from": "a", "to": "b"}, {"from": "a", "to": "b"}]}', DuplicateEdge),
        ('{"vertices": ["a"], "edges": [{"from": "a", "to": "a", "weight": true}]}', ParseError),
        ('{"vertices": ["a"], "edges": [{"from": "a", "to": "a", "weight": "1"}]}', ParseError),
    ],
)
def test_json_graph_errors(text, error):
    with pytest.raises(error):
        parse_graph(text, "json")


def test_json_error_has_position():
    with pytest.raises(ParseError) as info:
        parse_graph('{\n  "vertices": [1,\n}', "json")
    assert info.value.line == 3


def test_unknown_format():
    with pytest.raises(ValueError):
        parse_graph("1\n", "dot")


def test_automaton_table():
    T = parse_transition_table((FIXTURES / "automaton.json").read_bytes())
    assert T.delta("q1", "a") == {"q1", "q2"}
    assert T.delta("q2", "d") == {"q3"}
    assert T.delta("q3", "a") == frozenset()


def test_table_without_transitions():
    T = parse_transition_table('{"states": ["p"], "alphabet": ["a"], "transitions": []}')
    assert T.transitions == {}


@pytest.mark.parametrize(
    "text, error",
    [
        ('{"states": ["p"], "alphabet": ["a"], "transitions": [{"from": "p", "on": "a", "to": ["r"]}]}', UnknownState),
        ('{"states": ["p"], "alphabet": ["a"], "transitions": [{"from": "r", "on": "a", "to": ["p"]}]}', UnknownState),
        ('{"states": ["p"], "alphabet": ["a"], "transitions": [{"from": "p", "on": "b", "to": ["p"]}]}', UnknownLetter),
        ('{"states": [], "alphabet": ["a"]}', ParseError),
        ('{"states": ["p"], "alphabet": []}', ParseError),
        ('{"states": ["p"], "alphabet": ["a"], "transitions": [{"from": "p", "on": "a", "to": "p"}]}', ParseError),
        ("nope", ParseError),
    ],
)
def test_table_errors(text, error):
    with pytest.raises(error):
        parse_transition_table(text)


def test_render_relation_json():
    out = render(MatrixReport("relation", tuple("12345"), REL_CLOSURE), "json")
    assert json.loads(out)["matrix"] == [[0, 1, 1, 1, 0], [0, 0, 1, 1, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 0], [0, 1, 1, 1, 0]]
    assert b'"matrix":[[0,1,1,1,0],[0,0,1,1,0],[0,0,0,1,0],[0,0,0,0,0],[0,1,1,1,0]]' in out


def test_render_empty_path_cell():
    report = MatrixReport("paths", ("a", "b"), [[frozenset(), frozenset({(0, 1)})], [frozenset(), frozenset()]])
    assert json.loads(render(report, "json"))["paths"] == {"a->a": [], "a->b": [["a", "b"]], "b->a": [], "b->b": []}
    text = render(report, "text").decode()
    assert text.splitlines()[2].split() == ["b", ".", "."]


def test_render_unreachable():
    report = MatrixReport("distance", ("a", "b"), [[0, 5], [UNREACHABLE, 0]])
    assert json.loads(render(report, "json"))["matrix"] == [[0, 5], [None, 0]]
    assert render(report, "text").decode().splitlines()[2].split() == ["b", "inf", "0"]


def test_render_letters_sorted():
    report = MatrixReport("letters", ("p",), [[frozenset("cab")]])
    assert json.loads(render(report, "json"))["matrix"] == [[["a", "b", "c"]]]
    assert "{a,b,c}" in render(report, "text").decode()


def test_render_rejects_unknown():
    with pytest.raises(TypeError):
        render(object(), "json")
    with pytest.raises(ValueError):
        render(MatrixReport("count", ("a",), [[0]]), "yaml")
    with pytest.raises(ValueError):
        MatrixReport("bogus", ("a",), [[0]])


def test_render_is_deterministic():
    report = MatrixReport("paths", ("1", "2", "3"),
                          [[frozenset(), frozenset({(0, 1)}), frozenset({(0, 2), (0, 1, 2)})]] +
                          [[frozenset()] * 3] * 2)
    assert render(report, "json") == render(report, "json")
    assert render(report, "text") == render(report, "text")


names = st.text(alphabet="abcxyz019_", min_size=1, max_size=4)


@st.composite
def documents(draw):
    vertices = draw(st.lists(names, min_size=1, max_size=6, unique=True))
    pairs = draw(st.lists(st.tuples(st.sampled_from(vertices), st.sampled_from(vertices)), unique=True, max_size=12))
    weights = draw(st.sampled_from(["none", "int", "float"]))
    edges = []
    for u, v in pairs:
        w = None
        if weights == "int":
            w = draw(st.integers(-100, 100))
        elif weights == "float":
            w = draw(st.floats(-1e6, 1e6, allow_nan=False))
        edges.append(Edge(u, v, w))
    return GraphDocument(tuple(vertices), tuple(edges))


@given(documents())
def test_json_round_trip(doc):
    text = render(doc, "json")
    again = parse_graph(text)
    assert again == doc
    assert parse_graph(render(again, "json")) == again


@given(documents())
def test_edge_list_round_trip(doc):
    assert parse_graph(render(doc, "text")) == doc


def test_table_round_trip():
    T = parse_transition_table((FIXTURES / "automaton.json").read_bytes())
    again = parse_transition_table(render(T, "json"))
    assert again == T
    assert render(again, "json") == render(T, "json")
    assert "q1" in render(T, "text").decode()


def test_table_render_text():
    T = TransitionTable(("p", "q"), ("a",), {("p", "a"): {"q", "p"}})
    assert render(T, "text").decode().splitlines()[1].split() == ["p", "{p,q}"]
