"""Constructive rewrites and generators for construction expressions.

Everything here manipulates expressions, never the solver: given an
expression for a graph these functions produce expressions for related
graphs (complement, doubled copies, apex extensions, inflations) with
controlled label growth, plus the caterpillar-quotient upper bound for
cographs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cotree import Cotree, Factorization, build_cotree, threshold_factorize
from .expr import (
    AddEdges,
    AddVertex,
    Expression,
    Relabel,
    evaluate,
    final_classes,
    fresh_label,
    fresh_labels,
)
from .graphs import Graph, _bits


class NotASinkError(Exception):
    """The given label is not a sink label of the expression."""


class EdgelessInputError(Exception):
    """The construction needs at least one edge in the input graph."""


class UnusedLabelError(Exception):
    """The given label does not occur in the expression."""


class NotThresholdError(Exception):
    """No elimination order by isolated/dominating vertices exists."""


def sink_labels(e: Expression) -> frozenset[str]:
    """Labels never mentioned by AddEdges and never a Relabel source.

    Being a Relabel target does not disqualify a label: vertices may be
    moved INTO a sink class, they just never leave it or gain edges by
    class operations afterwards.
    """
    blocked = set()
    for op in e.ops:
        if isinstance(op, AddEdges):
            blocked.add(op.i)
            blocked.add(op.j)
        elif isinstance(op, Relabel):
            blocked.add(op.src)
    return frozenset(e.labels() - blocked)


def is_sink_free(e: Expression) -> bool:
    return not sink_labels(e)


def _doubled(e: Expression) -> tuple[Expression, str]:
    fresh = fresh_label(e.labels())
    ops = list(e.ops)
    for lab in sorted(final_classes(e)):
        ops.append(Relabel(lab, fresh))
    ops.extend(e.ops)
    return Expression(tuple(ops)), fresh


def double_with_new_label(e: Expression) -> Expression:
    """Expression for two disjoint copies of e's graph, one extra label.

    The finished first copy is parked on a fresh label which the replay
    never touches, so the fresh label is a sink of the result.
    """
    return _doubled(e)[0]


def pivot_construction(e: Expression, sink: str) -> Expression:
    """From a sink-labelled expression for G, build K1 joined to G+G
    without any new label.

    Run e, collapse everything onto the sink label, run e again,
    collapse again, then insert one apex vertex with any non-sink label
    and connect it to the sink class.  The apex needs G to have an edge,
    otherwise no second label exists.
    """
    if sink not in sink_labels(e):
        raise NotASinkError(f"label {sink!r} is not a sink of the expression")
    g, _ = evaluate(e)
    if g.edge_count() == 0:
        raise EdgelessInputError("pivot construction needs at least one edge")
    end = sorted(final_classes(e))
    ops = list(e.ops)
    for lab in end:
        if lab != sink:
            ops.append(Relabel(lab, sink))
    ops.extend(e.ops)
    for lab in end:
        if lab != sink:
            ops.append(Relabel(lab, sink))
    apex = min(e.labels() - {sink})
    ops.append(AddVertex(apex))
    ops.append(AddEdges(apex, sink))
    return Expression(tuple(ops))


def generate_gk(k: int) -> tuple[Graph, Expression]:
    """The k-th member of the doubling/apex family, with its expression.

    Level 1 is a single edge on two labels; each level doubles the
    previous graph (gaining a fresh sink label) and then applies the
    pivot construction, so level k uses k+1 labels on (7*4^(k-1)-1)/3
    vertices.  The apex vertex carries the highest id.
    """
    if k < 1:
        raise ValueError("level must be at least 1")
    e = Expression((AddVertex("a"), AddVertex("b"), AddEdges("a", "b")))
    for _ in range(k - 1):
        doubled, fresh = _doubled(e)
        e = pivot_construction(doubled, fresh)
    return evaluate(e)[0], e


# ---------------------------------------------------------------------------
# Threshold graphs: two labels via an isolated/dominating build order.
# ---------------------------------------------------------------------------


def threshold_construction_order(g: Graph) -> tuple[int, ...]:
    """An insertion order in which every vertex is isolated from or
    adjacent to all of its predecessors; raises if none exists."""
    remaining = g.vertices_mask()
    size = g.n
    removed: list[int] = []
    while remaining:
        pick = -1
        for u in _bits(remaining):
            d = (g.adj[u] & remaining).bit_count()
            if d == 0 or d == size - 1:
                pick = u
                break
        if pick < 0:
            raise NotThresholdError("no isolated or dominating vertex to remove")
        removed.append(pick)
        remaining &= ~(1 << pick)
        size -= 1
    return tuple(reversed(removed))


def threshold_expression(g: Graph) -> tuple[Expression, tuple[int, ...]]:
    """Two-label expression (one if g has no edges) plus the insertion
    order: inserted vertex t is g's vertex order[t].

    Each vertex arrives with a spare label, is joined to the common pool
    if it dominates its predecessors, and is then relabelled into the
    pool.
    """
    if g.edge_count() == 0:
        return Expression(tuple(AddVertex("a") for _ in range(g.n))), tuple(
            range(g.n)
        )
    order = threshold_construction_order(g)
    pool, spare = "a", "b"
    ops: list = []
    prev_mask = 0
    for t, u in enumerate(order):
        deg = (g.adj[u] & prev_mask).bit_count()
        if deg not in (0, t):
            raise AssertionError("construction order violated")
        ops.append(AddVertex(spare))
        if t > 0 and deg == t:
            ops.append(AddEdges(spare, pool))
        ops.append(Relabel(spare, pool))
        prev_mask |= 1 << u
    return Expression(tuple(ops)), order


# ---------------------------------------------------------------------------
# Insertion-label normal form and complementation.
#
# Both rest on one structural fact: label classes only ever grow or
# merge, so when a vertex v arrives, every class holding an
# already-inserted neighbour of v consists entirely of neighbours of v
# (any classmate shares every later AddEdges).  Hence v can be inserted
# with a reserved label, wired to whole classes immediately, and folded
# into its proper class.
# ---------------------------------------------------------------------------


def _insertion_label(e: Expression) -> str:
    """An existing label empty before every insertion, else a fresh one."""
    alphabet = sorted(e.labels())
    candidates = set(alphabet)
    classes: dict[str, int] = {}
    count = 0
    for op in e.ops:
        if isinstance(op, AddVertex):
            candidates -= {lab for lab, mask in classes.items() if mask}
            if not candidates:
                break
            classes[op.label] = classes.get(op.label, 0) | (1 << count)
            count += 1
        elif isinstance(op, Relabel):
            moved = classes.pop(op.src, 0)
            if moved:
                classes[op.dst] = classes.get(op.dst, 0) | moved
    return min(candidates) if candidates else fresh_label(alphabet)


def _insertion_label_form(e: Expression, *, complemented: bool) -> Expression:
    g, _ = evaluate(e)
    iota = _insertion_label(e)
    out: list = []
    classes: dict[str, int] = {}
    count = 0
    for op in e.ops:
        if isinstance(op, AddVertex):
            inserted = (1 << count) - 1
            wanted = g.adj[count] if not complemented else ~g.adj[count]
            wanted &= inserted
            out.append(AddVertex(iota))
            for lab in sorted(lab for lab, m in classes.items() if m & wanted):
                out.append(AddEdges(iota, lab))
            if op.label != iota:
                out.append(Relabel(iota, op.label))
            classes[op.label] = classes.get(op.label, 0) | (1 << count)
            count += 1
        elif isinstance(op, Relabel):
            out.append(op)
            moved = classes.pop(op.src, 0)
            if moved:
                classes[op.dst] = classes.get(op.dst, 0) | moved
        # original AddEdges ops are dropped: all edges are now created
        # at insertion time of their later endpoint
    return Expression(tuple(out))


def normalize_insertion_label(e: Expression) -> Expression:
    """Same graph, every vertex inserted with one reserved label and
    wired to its already-present neighbours immediately; at most one
    label more than e."""
    return _insertion_label_form(e, complemented=False)


def complement_expression(e: Expression) -> Expression:
    """Expression for the complement graph, at most one extra label."""
    return _insertion_label_form(e, complemented=True)


# ---------------------------------------------------------------------------
# Keeping a label fixed.
# ---------------------------------------------------------------------------


def _swap_in(op, a: str, b: str):
    def sw(x: str) -> str:
        return b if x == a else a if x == b else x

    if isinstance(op, AddVertex):
        return AddVertex(sw(op.label))
    if isinstance(op, AddEdges):
        return AddEdges(sw(op.i), sw(op.j))
    return Relabel(sw(op.src), sw(op.dst))


def preserve_label(e: Expression, label: str) -> Expression:
    """Rewrite so vertices labelled `label` keep it forever.

    Wherever the class is about to be renamed away, rename the other
    class into it instead and swap the two names in everything that
    follows.  Graph, insertion order and label count are unchanged.
    """
    if label not in e.labels():
        raise UnusedLabelError(f"label {label!r} does not occur")
    ops = list(e.ops)
    start = 0
    while True:
        p = next(
            (
                i
                for i in range(start, len(ops))
                if isinstance(ops[i], Relabel) and ops[i].src == label
            ),
            None,
        )
        if p is None:
            return Expression(tuple(ops))
        other = ops[p].dst
        ops[p] = Relabel(other, label)
        for i in range(p + 1, len(ops)):
            ops[i] = _swap_in(ops[i], label, other)
        start = p + 1


# ---------------------------------------------------------------------------
# Inflation of expressions.
# ---------------------------------------------------------------------------


def compose_inflation(
    e_quotient: Expression,
    parts: Sequence[Expression],
    vertex_map: Sequence[int] | None = None,
) -> Expression:
    """Replace each inserted vertex of the quotient expression by a whole
    part, built with a shared throwaway label pool and folded into the
    vertex's label.

    parts[i] is the part for the quotient's vertex i as the quotient
    expression numbers them; vertex_map translates insertion positions
    to those numbers when the quotient expression does not insert in id
    order (vertex_map[t] = id of the t-th inserted vertex).  The result
    builds exactly the inflation of the quotient's graph by the part
    graphs, using at most len(pool) = max part width extra labels.
    """
    m = e_quotient.vertex_count()
    if len(parts) != m:
        raise ValueError(f"expected {m} parts, got {len(parts)}")
    if vertex_map is None:
        vm: Sequence[int] = range(m)
    else:
        if sorted(vertex_map) != list(range(m)):
            raise ValueError("vertex_map must be a permutation of part ids")
        vm = vertex_map
    pool_size = max(
        (p.label_count() for p in parts if p.vertex_count() > 1), default=0
    )
    pool = fresh_labels(e_quotient.labels(), pool_size)
    out: list = []
    t = 0
    for op in e_quotient.ops:
        if not isinstance(op, AddVertex):
            out.append(op)
            continue
        part = parts[vm[t]]
        t += 1
        if part.vertex_count() == 0:
            raise ValueError("empty part")
        if part.vertex_count() == 1:
            out.append(AddVertex(op.label))
            continue
        order: list[str] = []
        for pop in part.ops:
            for lab in (
                (pop.label,)
                if isinstance(pop, AddVertex)
                else (pop.i, pop.j)
                if isinstance(pop, AddEdges)
                else (pop.src, pop.dst)
            ):
                if lab not in order:
                    order.append(lab)
        rename = {lab: pool[i] for i, lab in enumerate(order)}
        for pop in part.ops:
            if isinstance(pop, AddVertex):
                out.append(AddVertex(rename[pop.label]))
            elif isinstance(pop, AddEdges):
                out.append(AddEdges(rename[pop.i], rename[pop.j]))
            else:
                out.append(Relabel(rename[pop.src], rename[pop.dst]))
        for lab in sorted(final_classes(part)):
            out.append(Relabel(rename[lab], op.label))
    return Expression(tuple(out))


# ---------------------------------------------------------------------------
# Upper bound for cographs by repeated caterpillar factorization.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class UpperBound:
    """Expression plus the insertion permutation certifying it: inserted
    vertex t of the expression realizes graph vertex vertex_map[t]."""

    expression: Expression
    vertex_map: tuple[int, ...]
    depth: int


def upper_bound_expression(g: Graph) -> UpperBound:
    """A valid expression for g (up to the recorded insertion order)
    using at most twice the factorization depth many labels."""
    c = build_cotree(g)
    expr, ids, depth = _upper_from_cotree(c)
    return UpperBound(expr, ids, depth)


def _upper_from_cotree(c: Cotree) -> tuple[Expression, tuple[int, ...], int]:
    f: Factorization = threshold_factorize(c)
    e_q, order = threshold_expression(f.quotient)
    part_exprs: list[Expression] = []
    part_ids: list[tuple[int, ...]] = []
    for part, block in zip(f.parts, f.blocks):
        if part.is_leaf():
            part_exprs.append(Expression((AddVertex("a"),)))
            part_ids.append(block)
        else:
            sub_expr, sub_ids, _ = _upper_from_cotree(part)
            part_exprs.append(sub_expr)
            part_ids.append(sub_ids)
    composed = compose_inflation(e_q, part_exprs, vertex_map=order)
    ids: list[int] = []
    for t in range(len(order)):
        ids.extend(part_ids[order[t]])
    return composed, tuple(ids), f.depth
