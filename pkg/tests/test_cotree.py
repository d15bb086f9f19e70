from __future__ import annotations

import pytest

from lcwlab.cotree import (
    JOIN,
    UNION,
    CotreeFormatError,
    NotCographError,
    build_cotree,
    canonical_code,
    canonicalize,
    cotree_to_graph,
    factorization_graph,
    format_cotree,
    is_quasi_threshold_cotree,
    is_threshold_cotree,
    join_node,
    leaf,
    leaves,
    parse_cotree,
    threshold_factorize,
    union_node,
)
from lcwlab.enumeration import (
    enumerate_cographs,
    enumerate_cotrees,
    threshold_graph_from_sequence,
)
from lcwlab.graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    is_threshold,
    path_graph,
    star_graph,
)
from lcwlab.transforms import generate_gk


def test_build_cotree_rejects_p4():
    with pytest.raises(NotCographError):
        build_cotree(path_graph(4))


def test_build_cotree_four_cycle():
    c = build_cotree(cycle_graph(4))
    assert format_cotree(c) == "(J (U 0 2) (U 1 3))"


def test_build_then_evaluate_is_identity_on_small_cographs():
    for n in range(1, 8):
        for g in enumerate_cographs(n):
            assert cotree_to_graph(build_cotree(g)) == g


def test_evaluate_then_build_recanonicalizes():
    for t in enumerate_cotrees(6):
        assert build_cotree(cotree_to_graph(t)) == canonicalize(t)


def test_canonicalize_flattens_same_kind_nesting():
    nested = parse_cotree("(U (U 0 1) 2)")
    assert canonicalize(nested) == parse_cotree("(U 0 1 2)")


def test_canonicalize_drops_single_child_chains():
    t = union_node([join_node([leaf(0), leaf(1)])])
    assert canonicalize(t) == join_node([leaf(0), leaf(1)])


def test_canonicalize_sorts_children_deterministically():
    a = parse_cotree("(U (J 2 3) 0 1)")
    b = parse_cotree("(U 1 (J 3 2) 0)")
    assert canonicalize(a) == canonicalize(b)


def test_canonical_code_ignores_vertex_ids():
    assert canonical_code(parse_cotree("(J 0 1)")) == canonical_code(
        parse_cotree("(J 5 9)")
    )
    assert canonical_code(parse_cotree("(J 0 1)")) != canonical_code(
        parse_cotree("(U 0 1)")
    )


def test_parse_format_round_trip():
    for text in ["0", "(J 0 1)", "(J (U 0 1) (U 2 3))", "(U 0 (J 1 2 3) 4)"]:
        assert format_cotree(parse_cotree(text)) == text


def test_parse_rejects_malformed_text():
    for bad in ["", "(J 0", "(J 0 1))", "(X 0 1)", "(J a b)", "(J)", "()"]:
        with pytest.raises(CotreeFormatError):
            parse_cotree(bad)


def test_cotree_to_graph_requires_contiguous_ids():
    with pytest.raises(ValueError):
        cotree_to_graph(parse_cotree("(J 0 2)"))
    with pytest.raises(ValueError):
        cotree_to_graph(parse_cotree("(J 0 0)"))


def test_shape_recognizers_hand_cases():
    assert is_threshold_cotree(build_cotree(star_graph(3)))
    c4 = build_cotree(cycle_graph(4))
    assert not is_quasi_threshold_cotree(c4)
    assert not is_threshold_cotree(c4)
    two_k2 = parse_cotree("(U (J 0 1) (J 2 3))")
    assert is_quasi_threshold_cotree(two_k2)
    assert not is_threshold_cotree(two_k2)


def test_factorize_leaf():
    f = threshold_factorize(leaf(0))
    assert f.quotient == complete_graph(1)
    assert f.blocks == ((0,),)
    assert f.depth == 1


def test_factorize_four_cycle():
    f = threshold_factorize(build_cotree(cycle_graph(4)))
    # spine J-U: the off-spine union block {1,3} joins both spine leaves
    assert f.quotient == Graph.from_edges(3, [(0, 1), (1, 2)])
    assert f.blocks == ((0,), (1, 3), (2,))
    assert f.depth == 2
    assert factorization_graph(f) == cycle_graph(4)


def test_factorization_rebuilds_exactly():
    for n in range(1, 8):
        for g in enumerate_cographs(n):
            f = threshold_factorize(build_cotree(g))
            assert factorization_graph(f) == g


def test_quotients_are_threshold():
    for n in range(1, 8):
        for g in enumerate_cographs(n):
            f = threshold_factorize(build_cotree(g))
            assert is_threshold(f.quotient)


def test_blocks_partition_and_order():
    for n in range(1, 7):
        for g in enumerate_cographs(n):
            f = threshold_factorize(build_cotree(g))
            seen = sorted(v for b in f.blocks for v in b)
            assert seen == list(range(g.n))
            assert [min(b) for b in f.blocks] == sorted(min(b) for b in f.blocks)
            for part, block in zip(f.parts, f.blocks):
                assert tuple(sorted(leaves(part))) == block


def test_threshold_graphs_have_depth_one():
    import itertools

    for length in range(0, 6):
        for seq in itertools.product("id", repeat=length):
            g = threshold_graph_from_sequence("".join(seq))
            assert threshold_factorize(build_cotree(g)).depth == 1


def test_doubling_family_depth_grows_by_level():
    for k in range(1, 5):
        g, _ = generate_gk(k)
        assert threshold_factorize(build_cotree(g)).depth == k


def test_kinds_exported():
    assert UNION != JOIN
