"""Cotrees: the union/join decomposition trees of cographs.

A cotree is either a leaf carrying a vertex id or an internal node of
kind UNION or JOIN with at least two children.  In canonical form no
internal node has a child of the same kind and children are ordered by
a deterministic code, so equal canonical cotrees mean isomorphic
cographs (and vice versa once vertex ids are ignored).

Also here: the caterpillar-quotient factorization used to derive label
bounds.  A caterpillar cotree (every internal node has at most one
internal child) describes a threshold graph; peeling the maximal
caterpillar off the root of an arbitrary cotree leaves a threshold
quotient plus one sub-cotree per quotient vertex.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, components_within, complete_graph

UNION = "U"
JOIN = "J"
LEAF = "leaf"


class NotCographError(Exception):
    """Raised when a graph has no cotree (it contains an induced P4)."""


class CotreeFormatError(Exception):
    """Raised when a cotree expression cannot be parsed."""


@dataclass(frozen=True)
class Cotree:
    kind: str
    vertex: int | None = None
    children: tuple["Cotree", ...] = ()

    def is_leaf(self) -> bool:
        return self.kind == LEAF

    def leaf_count(self) -> int:
        if self.is_leaf():
            return 1
        return sum(ch.leaf_count() for ch in self.children)


def leaf(vertex: int) -> Cotree:
    return Cotree(LEAF, vertex=vertex)


def union_node(children) -> Cotree:
    return Cotree(UNION, children=tuple(children))


def join_node(children) -> Cotree:
    return Cotree(JOIN, children=tuple(children))


def leaves(c: Cotree) -> tuple[int, ...]:
    if c.is_leaf():
        return (c.vertex,)
    out: list[int] = []
    for ch in c.children:
        out.extend(leaves(ch))
    return tuple(out)


def canonical_code(c: Cotree):
    """Vertex-id-free structure code; leaves share a single sentinel."""
    if c.is_leaf():
        return (0,)
    tag = 1 if c.kind == UNION else 2
    return (tag, *sorted(canonical_code(ch) for ch in c.children))


def canonicalize(c: Cotree) -> Cotree:
    """Flatten same-kind nesting, drop single-child nodes, sort children."""
    if c.is_leaf():
        return c
    flat: list[Cotree] = []
    for ch in c.children:
        ch = canonicalize(ch)
        if ch.kind == c.kind:
            flat.extend(ch.children)
        else:
            flat.append(ch)
    if len(flat) == 1:
        return flat[0]
    flat.sort(key=lambda ch: (canonical_code(ch), sorted(leaves(ch))))
    return Cotree(c.kind, children=tuple(flat))


def build_cotree(g: Graph) -> Cotree:
    """Decompose by connectivity of the graph and of its complement."""
    if g.n == 0:
        raise ValueError("empty graph has no cotree")
    full = g.vertices_mask()
    co_rows = [(full ^ row) & ~(1 << u) for u, row in enumerate(g.adj)]

    def rec(mask: int) -> Cotree:
        if mask & (mask - 1) == 0:
            return leaf(mask.bit_length() - 1)
        comps = components_within(g.adj, mask)
        if len(comps) > 1:
            return union_node(rec(m) for m in comps)
        comps = components_within(co_rows, mask)
        if len(comps) > 1:
            return join_node(rec(m) for m in comps)
        raise NotCographError("graph contains an induced P4")

    return canonicalize(rec(full))


def cotree_to_graph(c: Cotree) -> Graph:
    """Evaluate a cotree whose leaves are exactly 0..n-1."""
    ids = leaves(c)
    n = len(ids)
    if sorted(ids) != list(range(n)):
        raise ValueError("cotree leaves must be exactly 0..n-1")
    rows = [0] * n

    def rec(node: Cotree) -> int:
        if node.is_leaf():
            return 1 << node.vertex
        masks = [rec(ch) for ch in node.children]
        if node.kind == JOIN:
            total = 0
            for m in masks:
                total |= m
            for m in masks:
                other = total & ~m
                for u in range(n):
                    if m >> u & 1:
                        rows[u] |= other
        out = 0
        for m in masks:
            out |= m
        return out

    rec(c)
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# Text form: "(J (U 0 1) (U 2 3))"; a bare integer is a leaf.
# ---------------------------------------------------------------------------


def format_cotree(c: Cotree) -> str:
    if c.is_leaf():
        return str(c.vertex)
    inner = " ".join(format_cotree(ch) for ch in c.children)
    return f"({c.kind} {inner})"


def parse_cotree(text: str) -> Cotree:
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    if not tokens:
        raise CotreeFormatError("empty cotree expression")
    pos = 0

    def parse_node() -> Cotree:
        nonlocal pos
        if pos >= len(tokens):
            raise CotreeFormatError("unexpected end of input")
        tok = tokens[pos]
        pos += 1
        if tok == "(":
            if pos >= len(tokens) or tokens[pos] not in (UNION, JOIN):
                raise CotreeFormatError("expected 'U' or 'J' after '('")
            kind = tokens[pos]
            pos += 1
            children = []
            while pos < len(tokens) and tokens[pos] != ")":
                children.append(parse_node())
            if pos >= len(tokens):
                raise CotreeFormatError("missing ')'")
            pos += 1
            if not children:
                raise CotreeFormatError("internal node needs children")
            return Cotree(kind, children=tuple(children))
        if tok == ")":
            raise CotreeFormatError("unexpected ')'")
        try:
            return leaf(int(tok))
        except ValueError:
            raise CotreeFormatError(f"bad token {tok!r}") from None

    node = parse_node()
    if pos != len(tokens):
        raise CotreeFormatError("trailing tokens after cotree")
    return node


# ---------------------------------------------------------------------------
# Shape recognizers mirroring the forbidden-subgraph classes.
# ---------------------------------------------------------------------------


def _internal_nodes(c: Cotree):
    if not c.is_leaf():
        yield c
        for ch in c.children:
            yield from _internal_nodes(ch)


def is_quasi_threshold_cotree(c: Cotree) -> bool:
    """Every JOIN node has at most one non-leaf child."""
    for node in _internal_nodes(c):
        if node.kind == JOIN:
            if sum(1 for ch in node.children if not ch.is_leaf()) > 1:
                return False
    return True


def is_threshold_cotree(c: Cotree) -> bool:
    """Every internal node has at most one internal child (caterpillar)."""
    for node in _internal_nodes(c):
        if sum(1 for ch in node.children if not ch.is_leaf()) > 1:
            return False
    return True


# ---------------------------------------------------------------------------
# Caterpillar-quotient factorization.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Factorization:
    """Threshold quotient plus one part per quotient vertex.

    quotient vertex i stands for blocks[i], a sorted tuple of original
    vertex ids; parts[i] is the sub-cotree on those ids.  Blocks are
    numbered by smallest member, so when the blocks are contiguous id
    ranges (true for every graph our generators emit) plain inflation
    of the quotient by the part graphs rebuilds the input exactly.
    """

    quotient: Graph
    parts: tuple[Cotree, ...]
    blocks: tuple[tuple[int, ...], ...]
    depth: int


def _subtree_edges(c: Cotree) -> list[tuple[int, int]]:
    if c.is_leaf():
        return []
    out: list[tuple[int, int]] = []
    child_leaves = [leaves(ch) for ch in c.children]
    for ch in c.children:
        out.extend(_subtree_edges(ch))
    if c.kind == JOIN:
        for a in range(len(child_leaves)):
            for b in range(a + 1, len(child_leaves)):
                for u in child_leaves[a]:
                    for v in child_leaves[b]:
                        out.append((u, v))
    return out


def part_graph(part: Cotree) -> Graph:
    """Part as a graph on 0..size-1, original ids taken in sorted order."""
    ids = sorted(leaves(part))
    rank = {v: i for i, v in enumerate(ids)}
    return Graph.from_edges(
        len(ids), [(rank[u], rank[v]) for u, v in _subtree_edges(part)]
    )


def threshold_factorize(c: Cotree) -> Factorization:
    """Peel the maximal caterpillar spine off the root.

    Walking down from the root, the leaf children of each spine node
    enter the quotient as single-vertex blocks and exactly one internal
    child (most leaves, ties by canonical code then smallest id)
    continues the spine; the remaining internal children become parts.
    Two quotient vertices are adjacent exactly when the higher of their
    two spine attachment points is a JOIN node.
    """
    if c.is_leaf():
        return Factorization(complete_graph(1), (c,), ((c.vertex,),), 1)

    attached: list[tuple[int, Cotree]] = []
    spine_kinds: list[str] = []
    node = c
    while True:
        level = len(spine_kinds)
        spine_kinds.append(node.kind)
        internal = []
        for ch in node.children:
            if ch.is_leaf():
                attached.append((level, ch))
            else:
                internal.append(ch)
        if not internal:
            break
        internal.sort(
            key=lambda ch: (-ch.leaf_count(), canonical_code(ch), sorted(leaves(ch)))
        )
        for ch in internal[1:]:
            attached.append((level, ch))
        node = internal[0]

    attached.sort(key=lambda item: min(leaves(item[1])))
    blocks = tuple(tuple(sorted(leaves(part))) for _, part in attached)
    parts = tuple(part for _, part in attached)
    levels = [lvl for lvl, _ in attached]
    m = len(parts)
    edges = [
        (i, j)
        for i in range(m)
        for j in range(i + 1, m)
        if spine_kinds[min(levels[i], levels[j])] == JOIN
    ]
    depth = 1 + max(
        (threshold_factorize(p).depth for p in parts if not p.is_leaf()),
        default=0,
    )
    return Factorization(Graph.from_edges(m, edges), parts, blocks, depth)


def factorization_graph(f: Factorization) -> Graph:
    """Rebuild the factorized graph on its original vertex ids."""
    n = sum(len(b) for b in f.blocks)
    edges = []
    for part in f.parts:
        edges.extend(_subtree_edges(part))
    for i, j in f.quotient.edges():
        for u in f.blocks[i]:
            for v in f.blocks[j]:
                edges.append((u, v))
    return Graph.from_edges(n, edges)
