"""Text formats for graphs: simple edge lists and graph6 strings."""

from __future__ import annotations

from .graphs import Graph


class FormatError(Exception):
    """Raised when a graph file cannot be parsed."""


# ---------------------------------------------------------------------------
# Edge list: a header line "n m" followed by m lines "u v", vertices
# 0-indexed.  '#' starts a comment; blank lines are ignored.
# ---------------------------------------------------------------------------


def parse_edgelist(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line))
    if not rows:
        raise FormatError("missing 'n m' header line")
    lineno, header = rows[0]
    fields = header.split()
    if len(fields) != 2:
        raise FormatError(f"line {lineno}: header must be 'n m'")
    try:
        n, m = int(fields[0]), int(fields[1])
    except ValueError:
        raise FormatError(f"line {lineno}: header must be two integers") from None
    if n < 0 or m < 0:
        raise FormatError(f"line {lineno}: counts must be non-negative")
    edges = []
    for lineno, line in rows[1:]:
        fields = line.split()
        if len(fields) != 2:
            raise FormatError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise FormatError(f"line {lineno}: expected two integers") from None
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {lineno}: vertex out of range 0..{n - 1}")
        if u == v:
            raise FormatError(f"line {lineno}: self-loop at {u}")
        edges.append((u, v))
    if len(edges) != m:
        raise FormatError(f"header declares {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def format_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count()}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# graph6: the exchange format used by gtools.  The upper triangle of the
# adjacency matrix is read column by column (x(0,1), x(0,2), x(1,2),
# x(0,3), ...), packed into 6-bit groups, each group printed as one byte
# offset by 63.  Vertex counts below 63 take one leading byte; counts up
# to 258047 take '~' plus three bytes.
# ---------------------------------------------------------------------------

_HEADER = ">>graph6<<"


def _encode_size(n: int) -> str:
    if n < 0:
        raise FormatError("negative vertex count")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise FormatError("vertex count too large for this encoder")


def graph6_encode(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            bits.append((col >> i) & 1)
    while len(bits) % 6:
        bits.append(0)
    chunks = [
        chr((b0 << 5 | b1 << 4 | b2 << 3 | b3 << 2 | b4 << 1 | b5) + 63)
        for b0, b1, b2, b3, b4, b5 in zip(*[iter(bits)] * 6)
    ]
    return _encode_size(g.n) + "".join(chunks)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):].lstrip()
    if not s:
        raise FormatError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise FormatError("byte out of graph6 range")
    if data[0] == 63:
        if len(data) < 4:
            raise FormatError("truncated graph6 size")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise FormatError(f"graph6 body length mismatch for n={n}")
    bits = []
    for b in body:
        for s_ in (5, 4, 3, 2, 1, 0):
            bits.append((b >> s_) & 1)
    if any(bits[need:]):
        raise FormatError("non-zero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def parse_graph6_lines(text: str) -> list[Graph]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and line != _HEADER:
            out.append(graph6_decode(line))
    return out


def format_graph6_lines(graphs: list[Graph]) -> str:
    return "".join(graph6_encode(g) + "\n" for g in graphs)
