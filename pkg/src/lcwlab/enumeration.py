"""Exhaustive small-instance generators used by the verification suite.

Graphs are enumerated up to isomorphism by vertex extension: every
graph on m+1 vertices contains an m-vertex induced subgraph, so adding
one vertex with every possible neighbourhood to every m-vertex graph
and de-duplicating canonically covers the next size.

Cographs come from their tree models instead: unordered trees whose
internal nodes alternate between union and join and have at least two
children correspond one-to-one with cograph isomorphism classes, so
enumerating canonical tree shapes needs no graph-level de-duplication.
Leaves are numbered in depth-first order, which keeps every subtree's
vertex set a contiguous interval.
"""

from __future__ import annotations

from functools import lru_cache

from .cotree import JOIN, LEAF, UNION, Cotree, cotree_to_graph, canonical_code, leaf
from .graphs import Graph, canonical_form, empty_graph


def enumerate_graphs(n: int) -> list[Graph]:
    """All graphs on n vertices, one per isomorphism class."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if n == 0:
        return [empty_graph(0)]
    level = [empty_graph(1)]
    for m in range(1, n):
        seen: set = set()
        nxt: list[Graph] = []
        for g in level:
            for nb in range(1 << m):
                adj = list(g.adj) + [nb]
                for u in range(m):
                    if nb >> u & 1:
                        adj[u] |= 1 << m
                h = Graph(m + 1, tuple(adj))
                key = canonical_form(h)
                if key not in seen:
                    seen.add(key)
                    nxt.append(h)
        level = nxt
    return level


@lru_cache(maxsize=None)
def _rooted_shapes(n: int, kind: str) -> tuple[Cotree, ...]:
    """Unlabelled alternating tree shapes with n leaves rooted at kind."""
    options: list[tuple[int, Cotree]] = []
    other = JOIN if kind == UNION else UNION
    for m in range(1, n):
        if m == 1:
            options.append((1, leaf(0)))
        else:
            options.extend((m, t) for t in _rooted_shapes(m, other))
    out: list[Cotree] = []

    def rec(start: int, remaining: int, chosen: tuple[Cotree, ...]) -> None:
        if remaining == 0:
            if len(chosen) >= 2:
                out.append(Cotree(kind, children=chosen))
            return
        for j in range(start, len(options)):
            m, t = options[j]
            if m <= remaining:
                rec(j, remaining - m, chosen + (t,))

    rec(0, n, ())
    return tuple(out)


def _number_leaves(shape: Cotree, counter: list[int]) -> Cotree:
    if shape.kind == LEAF:
        v = counter[0]
        counter[0] += 1
        return leaf(v)
    kids = sorted(shape.children, key=canonical_code)
    return Cotree(shape.kind, children=tuple(_number_leaves(c, counter) for c in kids))


def enumerate_cotrees(n: int) -> list[Cotree]:
    """Canonical tree models with n leaves, one per cograph class.

    Leaves carry 0..n-1 in depth-first order, so the leaf set of every
    subtree is a contiguous block of vertex ids.
    """
    if n < 0:
        raise ValueError("leaf count must be non-negative")
    if n == 0:
        return []
    if n == 1:
        return [leaf(0)]
    shapes = list(_rooted_shapes(n, UNION)) + list(_rooted_shapes(n, JOIN))
    return [_number_leaves(s, [0]) for s in shapes]


def enumerate_cographs(n: int) -> list[Graph]:
    """All cographs on n vertices, one per isomorphism class."""
    if n == 0:
        return [empty_graph(0)]
    return [cotree_to_graph(t) for t in enumerate_cotrees(n)]


def threshold_graph_from_sequence(seq: str) -> Graph:
    """Build a threshold graph from a creation sequence over 'i'/'d'.

    Vertex 0 exists up front; each character appends one vertex, either
    isolated ('i') or dominating ('d').  Ids follow creation order.
    """
    for ch in seq:
        if ch not in "id":
            raise ValueError(f"creation sequence may only contain 'i'/'d', got {ch!r}")
    n = len(seq) + 1
    edges = []
    for t, ch in enumerate(seq, start=1):
        if ch == "d":
            edges.extend((u, t) for u in range(t))
    return Graph.from_edges(n, edges)
