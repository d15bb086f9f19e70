"""Exact width decision for construction expressions by state search.

A prefix of an expression is summarized by (a) which vertices exist,
(b) the partition of them into label classes, and (c) which edges have
been created.  Label names are irrelevant, so a state stores the
partition as a sorted tuple of vertex masks.  The searched normal form
applies two reductions:

Saturation: after every insert or merge, apply every safe AddEdges,
i.e. connect every class pair that is fully adjacent in the target
graph.  Safety never depends on the edges built so far, and creating a
target edge earlier can only help: later inserts and relabels ignore
edges entirely and later AddEdges just have less to add.

Dominance: among states sharing (vertices, partition), one whose built
edge set contains another's can do anything the other can, because any
finishing sequence adds edges monotonically and ends at exactly the
target edge set either way.  Only maximal built sets are kept.

Dead ends are cut early: a missing target edge whose endpoints share a
class can never be created (classes never split), so inserts and merges
that would trap an unbuilt edge inside a class are not generated.

The sink variant reserves one class that AddEdges never touches and
that vertices never leave: anything may be relabelled into it, and only
isolated vertices of the target may be inserted directly into it.

``naive_oracle_lcw`` is the deliberately independent ground truth: a
breadth-first run over raw operation sequences with plain state
de-duplication and none of the reductions above.
"""

from __future__ import annotations

from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from string import ascii_lowercase

from .expr import AddEdges, AddVertex, Expression, Relabel
from .graphs import Graph, _bits, twin_classes


@dataclass(frozen=True)
class SolverConfig:
    node_budget: int = 50_000_000
    saturation: bool = True
    dominance: bool = True
    twin_pruning: bool = False
    jobs: int = 1


DEFAULT_CONFIG = SolverConfig()


@dataclass(frozen=True)
class Decision:
    outcome: str  # "yes" | "no" | "budget"
    witness: Expression | None = None
    states: int = 0

    @property
    def is_yes(self) -> bool:
        return self.outcome == "yes"

    @property
    def is_no(self) -> bool:
        return self.outcome == "no"

    @property
    def exhausted(self) -> bool:
        return self.outcome == "budget"


class BudgetExhaustedError(Exception):
    """Search ran out of state budget; carries the surviving bounds."""

    def __init__(self, lower: int, upper: int | None, states: int):
        rng = f">= {lower}" if upper is None else f"in [{lower}, {upper}]"
        super().__init__(f"budget exhausted; width {rng}")
        self.lower = lower
        self.upper = upper
        self.states = states


def _pair_bits(n: int) -> list[list[int]]:
    table = [[0] * n for _ in range(n)]
    k = 0
    for j in range(1, n):
        for i in range(j):
            table[i][j] = 1 << k
            table[j][i] = 1 << k
            k += 1
    return table


def _cross_pairs(c1: int, c2: int, pb: list[list[int]]) -> int:
    acc = 0
    m1 = c1
    while m1:
        b = m1 & -m1
        row = pb[b.bit_length() - 1]
        m1 ^= b
        m2 = c2
        while m2:
            b2 = m2 & -m2
            acc |= row[b2.bit_length() - 1]
            m2 ^= b2
    return acc


class _Engine:
    def __init__(self, g: Graph, k: int, cfg: SolverConfig, sink_mode: bool):
        self.g = g
        self.k = k
        self.cfg = cfg
        self.sink_mode = sink_mode
        self.limit = k - 1 if sink_mode else k
        self.full = g.vertices_mask()
        self.pb = _pair_bits(g.n)
        self.target = 0
        for u, v in g.edges():
            self.target |= self.pb[u][v]
        self.adj = g.adj
        if cfg.twin_pruning:
            self.twin_of = [0] * g.n
            for i, cls in enumerate(twin_classes(g)):
                for v in cls:
                    self.twin_of[v] = i
        else:
            self.twin_of = None

    def _common_nbrs(self, c: int) -> int:
        acc = self.full
        m = c
        while m and acc:
            b = m & -m
            acc &= self.adj[b.bit_length() - 1]
            m ^= b
        return acc

    def _missing_cross(self, c1: int, c2: int, built: int) -> bool:
        m1 = c1
        while m1:
            b = m1 & -m1
            u = b.bit_length() - 1
            m1 ^= b
            need = self.adj[u] & c2
            row = self.pb[u]
            while need:
                b2 = need & -need
                if not built & row[b2.bit_length() - 1]:
                    return True
                need ^= b2
        return False

    def _edges_done(self, c: int, built: int) -> bool:
        # Every target edge at a vertex of c is already built.  Joining
        # the sink freezes c: nothing incident to it can be added later.
        m1 = c
        while m1:
            b = m1 & -m1
            u = b.bit_length() - 1
            m1 ^= b
            need = self.adj[u]
            row = self.pb[u]
            while need:
                b2 = need & -need
                if not built & row[b2.bit_length() - 1]:
                    return False
                need ^= b2
        return True

    def _saturate(self, classes: tuple[int, ...], changed: int, built: int) -> int:
        comm = self._common_nbrs(changed)
        for d in classes:
            if d != changed and d & comm == d:
                built |= _cross_pairs(changed, d, self.pb)
        return built

    def _insert_candidates(self, uninserted: int):
        if self.twin_of is None:
            return list(_bits(uninserted))
        seen = set()
        out = []
        for v in _bits(uninserted):
            t = self.twin_of[v]
            if t not in seen:
                seen.add(t)
                out.append(v)
        return out

    def expand(self, state):
        classes, sink, built = state
        inserted = sink
        for c in classes:
            inserted |= c
        children = []
        sat = self.cfg.saturation

        def emit(desc, new_classes, new_sink, new_built, changed):
            if sat and changed:
                new_built = self._saturate(new_classes, changed, new_built)
            children.append((desc, (new_classes, new_sink, new_built)))

        for v in self._insert_candidates(self.full & ~inserted):
            bit = 1 << v
            for c in classes:
                if self.adj[v] & c:
                    continue  # an unbuilt target edge would be trapped
                nc = c | bit
                cl = tuple(sorted([x for x in classes if x != c] + [nc]))
                emit(("ins", v, c), cl, sink, built, nc)
            if len(classes) < self.limit:
                cl = tuple(sorted(classes + (bit,)))
                emit(("new", v), cl, sink, built, bit)
            if self.sink_mode and self.adj[v] == 0:
                children.append((("sinkins", v), (classes, sink | bit, built)))
        for a in range(len(classes)):
            for b in range(a + 1, len(classes)):
                ci, cj = classes[a], classes[b]
                if self._missing_cross(ci, cj, built):
                    continue
                merged = ci | cj
                cl = tuple(
                    sorted([x for x in classes if x != ci and x != cj] + [merged])
                )
                emit(("merge", ci, cj), cl, sink, built, merged)
        if self.sink_mode:
            for c in classes:
                if not self._edges_done(c, built):
                    continue
                cl = tuple(x for x in classes if x != c)
                children.append((("sinkmerge", c), (cl, sink | c, built)))
        if not sat:
            for a in range(len(classes)):
                for b in range(a + 1, len(classes)):
                    ci, cj = classes[a], classes[b]
                    if self._common_nbrs(ci) & cj != cj:
                        continue
                    cross = _cross_pairs(ci, cj, self.pb)
                    if cross & ~built:
                        children.append(
                            (("edges", ci, cj), (classes, sink, built | cross))
                        )
        return children

    def run(self) -> Decision:
        root = ((), 0, 0)
        visited: dict = {((), 0): [0]}
        parents: dict = {root: None}
        stack = [root]
        expanded = 0
        pool = (
            ThreadPoolExecutor(max_workers=self.cfg.jobs)
            if self.cfg.jobs > 1
            else None
        )
        try:
            while stack:
                batch = []
                while stack and len(batch) < max(1, self.cfg.jobs):
                    state = stack.pop()
                    key = (state[0], state[1])
                    if state[2] not in visited.get(key, ()):
                        continue  # superseded by a dominating arrival
                    inserted = state[1]
                    for c in state[0]:
                        inserted |= c
                    if inserted == self.full and state[2] == self.target:
                        return Decision("yes", self._witness(parents, state), expanded)
                    batch.append(state)
                if not batch:
                    break
                if expanded + len(batch) > self.cfg.node_budget:
                    return Decision("budget", None, expanded)
                expanded += len(batch)
                if pool is None:
                    results = [self.expand(s) for s in batch]
                else:
                    results = list(pool.map(self.expand, batch))
                for state, children in zip(batch, results):
                    for desc, child in children:
                        self._push(child, state, desc, visited, parents, stack)
            return Decision("no", None, expanded)
        finally:
            if pool is not None:
                pool.shutdown(wait=False)

    def _push(self, child, parent, desc, visited, parents, stack):
        key = (child[0], child[1])
        built = child[2]
        kept = visited.get(key)
        if kept is None:
            visited[key] = [built]
        else:
            if self.cfg.dominance:
                if any(b | built == b for b in kept):
                    return
                kept[:] = [b for b in kept if b | built != built]
            elif built in kept:
                return
            kept.append(built)
        parents[child] = (parent, desc)
        stack.append(child)

    def _witness(self, parents, state) -> Expression:
        descs = []
        cur = state
        while parents[cur] is not None:
            cur, desc = parents[cur]
            descs.append(desc)
        descs.reverse()

        names = [c for c in ascii_lowercase if c != "s"]
        names += [f"l{i}" for i in range(max(0, self.g.n - len(names)))]
        available = sorted(names[: self.limit])
        label_of: dict[int, str] = {}
        ops: list = []
        built = 0
        sat = self.cfg.saturation

        def saturate_emit(changed_mask: int):
            nonlocal built
            comm = self._common_nbrs(changed_mask)
            partners = sorted(
                (lab, m) for m, lab in label_of.items() if m != changed_mask
            )
            for lab, m in partners:
                if m & comm == m:
                    cross = _cross_pairs(changed_mask, m, self.pb)
                    if cross & ~built:
                        ops.append(AddEdges(label_of[changed_mask], lab))
                    built |= cross

        for desc in descs:
            kind = desc[0]
            if kind == "ins":
                _, v, cmask = desc
                lab = label_of.pop(cmask)
                nc = cmask | (1 << v)
                label_of[nc] = lab
                ops.append(AddVertex(lab))
                if sat:
                    saturate_emit(nc)
            elif kind == "new":
                v = desc[1]
                lab = available.pop(0)
                label_of[1 << v] = lab
                ops.append(AddVertex(lab))
                if sat:
                    saturate_emit(1 << v)
            elif kind == "sinkins":
                ops.append(AddVertex("s"))
            elif kind == "merge":
                _, ci, cj = desc
                li = label_of.pop(ci)
                lj = label_of.pop(cj)
                label_of[ci | cj] = lj
                ops.append(Relabel(li, lj))
                available.insert(0, li)
                available.sort()
                if sat:
                    saturate_emit(ci | cj)
            elif kind == "sinkmerge":
                ci = desc[1]
                li = label_of.pop(ci)
                ops.append(Relabel(li, "s"))
                available.insert(0, li)
                available.sort()
            else:  # explicit edges
                _, ci, cj = desc
                ops.append(AddEdges(label_of[ci], label_of[cj]))
                built |= _cross_pairs(ci, cj, self.pb)
        return Expression(tuple(ops))


def lcw_at_most(g: Graph, k: int, cfg: SolverConfig | None = None) -> Decision:
    """Can g be built with at most k labels?"""
    if k < 0:
        raise ValueError("label bound must be non-negative")
    return _Engine(g, k, cfg or DEFAULT_CONFIG, sink_mode=False).run()


def exists_sink_expression(
    g: Graph, k: int, cfg: SolverConfig | None = None
) -> Decision:
    """Can g be built with at most k labels one of which is a sink?"""
    if k < 1:
        raise ValueError("sink search needs at least one label")
    return _Engine(g, k, cfg or DEFAULT_CONFIG, sink_mode=True).run()


def lcw_exact(g: Graph, cfg: SolverConfig | None = None) -> tuple[int, Expression]:
    """Smallest label count together with a witness expression."""
    cfg = cfg or DEFAULT_CONFIG
    if g.n == 0:
        return 0, Expression()
    for k in range(1, g.n + 1):
        d = lcw_at_most(g, k, cfg)
        if d.is_yes:
            return k, d.witness
        if d.exhausted:
            raise BudgetExhaustedError(lower=k, upper=None, states=d.states)
    raise AssertionError("n labels always suffice")


def all_efficient_sink_free(g: Graph, cfg: SolverConfig | None = None) -> bool:
    """True when no minimum-width expression for g has a sink label."""
    cfg = cfg or DEFAULT_CONFIG
    k, _ = lcw_exact(g, cfg)
    d = exists_sink_expression(g, k, cfg)
    if d.exhausted:
        raise BudgetExhaustedError(lower=k, upper=k, states=d.states)
    return d.is_no


# ---------------------------------------------------------------------------
# Ground-truth oracle.
# ---------------------------------------------------------------------------


def naive_oracle_lcw(
    g: Graph, k: int, max_ops: int | None = None
) -> Decision:
    """Breadth-first enumeration of raw operation sequences over a fixed
    alphabet of k labels, de-duplicating exact (classes, built) states.

    Only two validity filters apply: AddEdges must create target edges
    exclusively (anything else can never finish), and labels enter use
    through AddVertex, so Relabel targets must be non-empty.  There is
    no saturation, no dominance and no symmetry reasoning; this is the
    reference the reduced search is validated against.
    """
    if k < 0:
        raise ValueError("label bound must be non-negative")
    full = g.vertices_mask()
    pb = _pair_bits(g.n)
    target = 0
    for u, v in g.edges():
        target |= pb[u][v]
    names = list(ascii_lowercase) + [f"l{i}" for i in range(max(0, k - 26))]
    root = ((0,) * k, 0)
    parents: dict = {root: None}
    queue = deque([(root, 0)])
    expanded = 0
    capped = False
    while queue:
        state, depth = queue.popleft()
        classes, built = state
        inserted = 0
        for c in classes:
            inserted |= c
        if inserted == full and built == target:
            return Decision("yes", _oracle_witness(parents, state), expanded)
        if max_ops is not None and depth >= max_ops:
            capped = True
            continue
        expanded += 1
        children = []
        for v in _bits(full & ~inserted):
            bit = 1 << v
            for t in range(k):
                cl = classes[:t] + (classes[t] | bit,) + classes[t + 1:]
                children.append((AddVertex(names[t]), (cl, built)))
        for i in range(k):
            ci = classes[i]
            if not ci:
                continue
            for j in range(i + 1, k):
                cj = classes[j]
                if not cj:
                    continue
                ok = True
                add = 0
                m1 = ci
                while m1 and ok:
                    b = m1 & -m1
                    u = b.bit_length() - 1
                    m1 ^= b
                    if cj & ~g.adj[u]:
                        ok = False
                        break
                    row = pb[u]
                    m2 = cj
                    while m2:
                        b2 = m2 & -m2
                        add |= row[b2.bit_length() - 1]
                        m2 ^= b2
                if ok and add & ~built:
                    children.append(
                        (AddEdges(names[i], names[j]), (classes, built | add))
                    )
        for i in range(k):
            if not classes[i]:
                continue
            for j in range(k):
                if i == j or not classes[j]:
                    continue
                cl = list(classes)
                cl[j] |= cl[i]
                cl[i] = 0
                children.append((Relabel(names[i], names[j]), (tuple(cl), built)))
        for op, child in children:
            if child not in parents:
                parents[child] = (state, op)
                queue.append((child, depth + 1))
    return Decision("budget" if capped else "no", None, expanded)


def _oracle_witness(parents, state) -> Expression:
    ops = []
    cur = state
    while parents[cur] is not None:
        cur, op = parents[cur]
        ops.append(op)
    ops.reverse()
    return Expression(tuple(ops))
