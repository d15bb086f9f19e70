from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lcwlab.expr import (
    AddEdges,
    AddVertex,
    Expression,
    ExpressionSyntaxError,
    MalformedExpressionError,
    Relabel,
    evaluate,
    expression,
    final_classes,
    fresh_label,
    fresh_labels,
    max_labels_in_use,
    parse,
    serialize,
    validate_builds,
)
from lcwlab.graphs import Graph, complete_graph, disjoint_union, empty_graph

K3_OPS = (
    AddVertex("a"),
    AddVertex("b"),
    AddEdges("a", "b"),
    Relabel("b", "a"),
    AddVertex("b"),
    AddEdges("a", "b"),
)


def test_triangle_from_two_labels():
    g, labels = evaluate(Expression(K3_OPS))
    assert g == complete_graph(3)
    assert labels == {0: "a", 1: "a", 2: "b"}
    assert max_labels_in_use(Expression(K3_OPS)) == 2


def test_vertices_numbered_by_insertion_order():
    e = expression([AddVertex("x"), AddVertex("y"), AddEdges("x", "y")])
    g, labels = evaluate(e)
    assert g.edges() == [(0, 1)]
    assert labels == {0: "x", 1: "y"}


def test_add_edges_connects_whole_classes():
    e = expression(
        [
            AddVertex("a"),
            AddVertex("a"),
            AddVertex("b"),
            AddVertex("b"),
            AddEdges("a", "b"),
        ]
    )
    g, _ = evaluate(e)
    assert g.edges() == [(0, 2), (0, 3), (1, 2), (1, 3)]


def test_add_edges_is_idempotent_on_existing_edges():
    e = expression(
        [AddVertex("a"), AddVertex("b"), AddEdges("a", "b"), AddEdges("a", "b")]
    )
    g, _ = evaluate(e)
    assert g.edges() == [(0, 1)]


def test_add_edges_requires_inhabited_labels():
    e = expression([AddVertex("a"), AddEdges("a", "b")])
    with pytest.raises(MalformedExpressionError, match="op 1") as info:
        evaluate(e)
    assert info.value.op_index == 1


def test_relabel_merges_classes():
    e = expression(
        [AddVertex("a"), AddVertex("b"), Relabel("b", "a"), AddVertex("b"), AddEdges("a", "b")]
    )
    g, labels = evaluate(e)
    assert g.edges() == [(0, 2), (1, 2)]
    assert labels[0] == labels[1] == "a"


def test_relabel_with_empty_source_is_a_no_op():
    e = expression([AddVertex("a"), Relabel("z", "a"), AddVertex("a")])
    g, _ = evaluate(e)
    assert g == empty_graph(2)


def test_relabel_into_fresh_label_renames():
    e = expression([AddVertex("a"), Relabel("a", "q"), AddVertex("a"), AddEdges("a", "q")])
    g, labels = evaluate(e)
    assert g.edges() == [(0, 1)]
    assert labels == {0: "q", 1: "a"}


def test_same_label_operations_rejected():
    with pytest.raises(MalformedExpressionError):
        AddEdges("a", "a")
    with pytest.raises(MalformedExpressionError):
        Relabel("a", "a")


def test_bad_label_tokens_rejected():
    for bad in ["", "a b", "a-b", "a.b"]:
        with pytest.raises(MalformedExpressionError):
            AddVertex(bad)


def test_expression_label_helpers():
    e = Expression(K3_OPS)
    assert e.labels() == {"a", "b"}
    assert e.label_count() == 2
    assert e.vertex_count() == 3
    assert len(e) == 6


def test_final_classes_masks():
    assert final_classes(Expression(K3_OPS)) == {"a": 0b011, "b": 0b100}


def test_max_labels_counts_simultaneous_use():
    # three labels appear overall but never more than two at once
    e = expression(
        [
            AddVertex("a"),
            AddVertex("b"),
            Relabel("b", "a"),
            AddVertex("c"),
            Relabel("c", "a"),
        ]
    )
    assert e.label_count() == 3
    assert max_labels_in_use(e) == 2


def test_validate_builds_exact_vs_isomorphic():
    # builds an edge on ids (0,1); target has the edge on (0,2)
    e = expression([AddVertex("a"), AddVertex("b"), AddEdges("a", "b"), AddVertex("c")])
    target = Graph.from_edges(3, [(0, 2)])
    assert not validate_builds(e, target)
    assert validate_builds(e, target, isomorphic=True)


def test_validate_builds_vertex_map():
    # isolated vertex first by id, but inserted last under the map
    target = disjoint_union(empty_graph(1), complete_graph(2))
    e = expression([AddVertex("a"), AddVertex("b"), AddEdges("a", "b"), AddVertex("c")])
    assert validate_builds(e, target, vertex_map=(1, 2, 0))
    assert not validate_builds(e, target, vertex_map=(0, 1, 2))
    with pytest.raises(ValueError):
        validate_builds(e, target, vertex_map=(0, 0, 1))


def test_validate_isomorphic_refuses_large_graphs():
    ops = [AddVertex("a") for _ in range(11)]
    g = empty_graph(11)
    with pytest.raises(ValueError):
        validate_builds(expression(ops), g, isomorphic=True)


def test_parse_the_three_ops():
    text = "v a\ne a b\nr a b\n"
    with pytest.raises(MalformedExpressionError):
        evaluate(parse(text))  # e before b exists
    e = parse("v a\nv b\ne a b\n")
    assert e.ops == (AddVertex("a"), AddVertex("b"), AddEdges("a", "b"))


def test_parse_ignores_comments_and_blanks():
    e = parse("# build one edge\n\nv a\n v b  # two classes\ne a b\n")
    assert len(e) == 3


def test_parse_errors_carry_position():
    with pytest.raises(ExpressionSyntaxError) as info:
        parse("v a\nq b\n")
    assert (info.value.line, info.value.col) == (2, 1)
    with pytest.raises(ExpressionSyntaxError) as info:
        parse("v a b\n")
    assert info.value.line == 1
    with pytest.raises(ExpressionSyntaxError) as info:
        parse("v a\ne a\n")
    assert info.value.line == 2
    with pytest.raises(ExpressionSyntaxError) as info:
        parse("e a a.b\n")
    assert (info.value.line, info.value.col) == (1, 5)


def test_serialize_canonical_form():
    assert serialize(Expression(K3_OPS)) == "v a\nv b\ne a b\nr b a\nv b\ne a b\n"


def test_fresh_label_avoids_taken_names():
    assert fresh_label({"a", "b"}) == "_t0"
    assert fresh_label({"_t0", "_t1"}) == "_t2"
    assert fresh_labels({"_t1"}, 2) == ["_t0", "_t2"]


_LABELS = st.sampled_from(["a", "b", "c", "_t0"])


@st.composite
def valid_expressions(draw):
    ops = []
    inhabited: set[str] = set()
    for _ in range(draw(st.integers(min_value=1, max_value=12))):
        kind = draw(st.sampled_from(["v", "v", "e", "r"]))
        if kind == "v":
            lab = draw(_LABELS)
            ops.append(AddVertex(lab))
            inhabited.add(lab)
        elif kind == "e" and len(inhabited) >= 2:
            i, j = draw(st.permutations(sorted(inhabited)))[:2]
            ops.append(AddEdges(i, j))
        elif kind == "r" and inhabited:
            src = draw(st.sampled_from(sorted(inhabited)))
            dst = draw(_LABELS.filter(lambda x: x != src))
            ops.append(Relabel(src, dst))
            inhabited.discard(src)
            inhabited.add(dst)
    return Expression(tuple(ops))


@given(valid_expressions())
def test_parse_serialize_round_trip(e):
    assert parse(serialize(e)) == e


@given(valid_expressions())
def test_evaluate_vertex_count_matches(e):
    g, labels = evaluate(e)
    assert g.n == e.vertex_count()
    assert set(labels) == set(range(g.n))
    # every vertex's final label is one of the final classes
    classes = final_classes(e)
    for v, lab in labels.items():
        assert classes[lab] >> v & 1
