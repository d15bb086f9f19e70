from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lcwlab.enumeration import enumerate_graphs
from lcwlab.formats import (
    FormatError,
    format_edgelist,
    format_graph6_lines,
    graph6_decode,
    graph6_encode,
    parse_edgelist,
    parse_graph6_lines,
)
from lcwlab.graphs import Graph, complete_graph, cycle_graph, path_graph


@st.composite
def graphs(draw, max_n: int = 9):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    bits = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
    return Graph.from_edges(n, [p for t, p in enumerate(pairs) if bits >> t & 1])


def test_edgelist_round_trip():
    g = cycle_graph(5)
    assert parse_edgelist(format_edgelist(g)) == g


def test_edgelist_accepts_comments_and_blank_lines():
    text = "# a triangle\n3 3\n\n0 1\n1 2  # last two\n0 2\n"
    assert parse_edgelist(text) == complete_graph(3)


def test_edgelist_errors_carry_line_numbers():
    with pytest.raises(FormatError, match="line 2"):
        parse_edgelist("2 1\n0 5\n")
    with pytest.raises(FormatError, match="line 2"):
        parse_edgelist("2 1\n1 1\n")
    with pytest.raises(FormatError, match="header"):
        parse_edgelist("0 1")
    with pytest.raises(FormatError, match="declares 2 edges"):
        parse_edgelist("3 2\n0 1\n")
    with pytest.raises(FormatError, match="line 2"):
        parse_edgelist("2 1\n0 x\n")


def test_graph6_triangle_frozen():
    # n=3 encodes to chr(3+63)='B'; the three upper-triangle bits 111
    # pad to 111000, one data byte chr(56+63)='w'.
    assert graph6_encode(complete_graph(3)) == "Bw"
    assert graph6_decode("Bw") == complete_graph(3)


def test_graph6_path_frozen():
    assert graph6_decode(graph6_encode(path_graph(4))) == path_graph(4)


def test_graph6_empty_graphs():
    for n in (0, 1, 2):
        g = Graph(n, (0,) * n)
        assert graph6_decode(graph6_encode(g)) == g


def test_graph6_optional_header_is_accepted():
    line = ">>graph6<<" + graph6_encode(complete_graph(3))
    assert graph6_decode(line) == complete_graph(3)


def test_graph6_rejects_bad_input():
    with pytest.raises(FormatError):
        graph6_decode("")
    with pytest.raises(FormatError):
        graph6_decode("B")  # truncated data
    with pytest.raises(FormatError):
        graph6_decode("Bw!")  # trailing garbage
    with pytest.raises(FormatError):
        graph6_decode("B" + chr(62))  # character below the printable range


def test_graph6_rejects_nonzero_padding():
    # K2 encodes as 'A_' (bit 1 then zero padding); force padding bits on.
    assert graph6_decode("A_") == complete_graph(2)
    with pytest.raises(FormatError, match="padding"):
        graph6_decode("A" + chr(0b011111 + 63))


def test_graph6_long_size_header():
    g = Graph.from_edges(70, [(0, 69), (3, 50)])
    enc = graph6_encode(g)
    assert enc.startswith("~")
    assert graph6_decode(enc) == g


def test_graph6_lines_round_trip():
    gs = enumerate_graphs(4)
    text = format_graph6_lines(gs)
    assert parse_graph6_lines(text) == gs


def test_graph6_exhaustive_against_networkx():
    # independent reference for the same encoding
    nx = pytest.importorskip("networkx")
    for n in range(1, 6):
        for g in enumerate_graphs(n):
            h = nx.Graph()
            h.add_nodes_from(range(g.n))
            h.add_edges_from(g.edges())
            ref = nx.to_graph6_bytes(h, header=False).decode().strip()
            assert graph6_encode(g) == ref
            back = nx.from_graph6_bytes(graph6_encode(g).encode())
            assert sorted(map(tuple, map(sorted, back.edges()))) == g.edges()


@given(graphs())
def test_graph6_round_trip_random(g):
    assert graph6_decode(graph6_encode(g)) == g


@given(graphs(7))
def test_edgelist_round_trip_random(g):
    assert parse_edgelist(format_edgelist(g)) == g
