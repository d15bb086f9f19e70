"""Undirected graphs on vertices 0..n-1 with bitset adjacency rows.

Graphs are immutable. Each vertex keeps its neighbourhood as an int
bitmask, which keeps the subset/superset tests used all over the
package (induced-pattern search, class-adjacency tests in the solver)
cheap at the scale we care about (a few dozen vertices).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterable, Iterator, Sequence


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(row.bit_count() for row in self.adj))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in _bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def vertices_mask(self) -> int:
        return (1 << self.n) - 1


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << u) for u in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """Star with centre 0 and the given number of leaves."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(g.n + h.n, tuple(rows))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    rows = [row | hmask for row in g.adj]
    rows += [(row << g.n) | gmask for row in h.adj]
    return Graph(g.n + h.n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ row) & ~(1 << u) for u, row in enumerate(g.adj)))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph on the given vertices, renumbered to 0.. in list order."""
    index = {v: i for i, v in enumerate(vertices)}
    if len(index) != len(vertices):
        raise ValueError("duplicate vertex in selection")
    rows = [0] * len(vertices)
    for i, v in enumerate(vertices):
        for w in _bits(g.adj[v]):
            j = index.get(w)
            if j is not None:
                rows[i] |= 1 << j
    return Graph(len(vertices), tuple(rows))


def permute(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel vertices: vertex u of g becomes perm[u] of the result."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    rows = [0] * g.n
    for u in range(g.n):
        row = 0
        for w in _bits(g.adj[u]):
            row |= 1 << perm[w]
        rows[perm[u]] = row
    return Graph(g.n, tuple(rows))


def inflate(g: Graph, parts: Sequence[Graph]) -> Graph:
    """Substitute parts[i] for vertex i of g; block i spans a contiguous
    id range starting at sum of earlier part sizes.

    Edges: each part keeps its own edges; every edge (i, j) of g becomes
    all edges between block i and block j.
    """
    if len(parts) != g.n:
        raise ValueError(f"expected {g.n} parts, got {len(parts)}")
    if any(p.n == 0 for p in parts):
        raise ValueError("empty part")
    offsets = [0]
    for p in parts:
        offsets.append(offsets[-1] + p.n)
    total = offsets[-1]
    block = [((1 << p.n) - 1) << offsets[i] for i, p in enumerate(parts)]
    rows = [0] * total
    for i, p in enumerate(parts):
        base = offsets[i]
        cross = 0
        for j in _bits(g.adj[i]):
            cross |= block[j]
        for u in range(p.n):
            rows[base + u] = (p.adj[u] << base) | cross
    return Graph(total, tuple(rows))


def inflation_blocks(parts: Sequence[Graph]) -> tuple[tuple[int, int], ...]:
    """(start, end) id ranges of each block in the inflated graph."""
    out = []
    at = 0
    for p in parts:
        out.append((at, at + p.n))
        at += p.n
    return tuple(out)


def connected_components(g: Graph) -> list[int]:
    """Vertex masks of the connected components, by smallest member."""
    return components_within(g.adj, g.vertices_mask())


def components_within(rows: Sequence[int], mask: int) -> list[int]:
    """Connected components of the subgraph induced on the mask."""
    comps = []
    todo = mask
    while todo:
        start = todo & -todo
        comp = start
        frontier = start
        while frontier:
            grow = 0
            for u in _bits(frontier):
                grow |= rows[u] & mask
            frontier = grow & ~comp
            comp |= frontier
        comps.append(comp)
        todo &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


# ---------------------------------------------------------------------------
# Isomorphism at desk scale.
#
# Canonical form: refine a vertex colouring (degree, then multiset of
# neighbour colours, to a fixed point), then take the lexicographically
# smallest edge bitmask over all colour-preserving orderings.  Exact for
# any graph; the refinement keeps the permutation count tolerable for
# anything we enumerate (n <= 10).
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _pair_index(n: int) -> tuple[tuple[int, ...], ...]:
    idx = [[0] * n for _ in range(n)]
    k = 0
    for j in range(1, n):
        for i in range(j):
            idx[i][j] = k
            idx[j][i] = k
            k += 1
    return tuple(tuple(r) for r in idx)


def _refined_cells(g: Graph) -> list[list[int]]:
    colors = [g.degree(u) for u in range(g.n)]
    while True:
        keys = [
            (colors[u], tuple(sorted(colors[w] for w in _bits(g.adj[u]))))
            for u in range(g.n)
        ]
        order = sorted(set(keys))
        new = [order.index(keys[u]) for u in range(g.n)]
        if new == colors:
            break
        colors = new
    cells: dict[int, list[int]] = {}
    for u in range(g.n):
        cells.setdefault(colors[u], []).append(u)
    return [cells[c] for c in sorted(cells)]


def canonical_form(g: Graph) -> tuple[int, int]:
    """(n, minimal edge bitmask) identifying g up to isomorphism."""
    if g.n <= 1:
        return (g.n, 0)
    cells = _refined_cells(g)
    pidx = _pair_index(g.n)
    best = None
    for per_cell in product(*(permutations(c) for c in cells)):
        ordering = [u for cell in per_cell for u in cell]
        pos = [0] * g.n
        for i, u in enumerate(ordering):
            pos[u] = i
        mask = 0
        for u, v in g.edges():
            mask |= 1 << pidx[pos[u]][pos[v]]
        if best is None or mask < best:
            best = mask
    return (g.n, best)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g) == canonical_form(h)


# ---------------------------------------------------------------------------
# Induced-pattern search and the hereditary-class recognizers.
# ---------------------------------------------------------------------------


def contains_induced(g: Graph, pattern: Graph) -> bool:
    """Exhaustive subset search with a degree-sequence filter per subset."""
    k = pattern.n
    if k > g.n:
        return False
    pat_seq = pattern.degree_sequence()
    for subset in combinations(range(g.n), k):
        mask = 0
        for v in subset:
            mask |= 1 << v
        seq = tuple(sorted((g.adj[v] & mask).bit_count() for v in subset))
        if seq != pat_seq:
            continue
        if is_isomorphic(induced_subgraph(g, subset), pattern):
            return True
    return False


P4 = path_graph(4)
C4 = cycle_graph(4)
K2 = complete_graph(2)
TWO_K2 = disjoint_union(K2, K2)
CO_2P3 = complement(disjoint_union(path_graph(3), path_graph(3)))


def is_cograph(g: Graph) -> bool:
    return not contains_induced(g, P4)


def is_quasi_threshold(g: Graph) -> bool:
    return not contains_induced(g, P4) and not contains_induced(g, C4)


def is_threshold(g: Graph) -> bool:
    return (
        not contains_induced(g, P4)
        and not contains_induced(g, C4)
        and not contains_induced(g, TWO_K2)
    )


def has_lcw_at_most_2(g: Graph) -> bool:
    """Two construction labels suffice exactly when g avoids P4, 2K2 and
    the complement of 2P3 as induced subgraphs."""
    return (
        not contains_induced(g, P4)
        and not contains_induced(g, TWO_K2)
        and not contains_induced(g, CO_2P3)
    )


def twin_classes(g: Graph) -> list[tuple[int, ...]]:
    """Partition vertices into classes whose members can be swapped by an
    automorphism: u ~ v iff N(u) \\ {v} == N(v) \\ {u}."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.adj[u] & ~(1 << v) == g.adj[v] & ~(1 << u):
                parent[find(u)] = find(v)
    classes: dict[int, list[int]] = {}
    for u in range(g.n):
        classes.setdefault(find(u), []).append(u)
    return sorted(tuple(c) for c in classes.values())
