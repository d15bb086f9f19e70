"""Linear construction expressions.

An expression is an ordered sequence of three operation kinds over a
label alphabet:

    AddVertex(a)    insert a new vertex labelled a
    AddEdges(a, b)  add every missing edge between the a- and b-classes
    Relabel(a, b)   move every a-labelled vertex to label b

Evaluation yields a graph whose vertex ids are insertion order.  The
number of distinct labels an expression mentions is its width; the
minimum width over all expressions building a graph is the measure the
solver computes exactly.

Text form, one operation per line ('#' starts a comment):

    v a
    e a b
    r a b

Labels are tokens over [A-Za-z0-9_].  Names starting with '_t' are
reserved for generated labels.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from .graphs import Graph, canonical_form, permute

_LABEL_RE = re.compile(r"[A-Za-z0-9_]+\Z")

FRESH_PREFIX = "_t"


class MalformedExpressionError(Exception):
    """An operation is structurally invalid or cannot be applied."""

    def __init__(self, message: str, op_index: int | None = None):
        if op_index is not None:
            message = f"op {op_index}: {message}"
        super().__init__(message)
        self.op_index = op_index


class ExpressionSyntaxError(Exception):
    """Unparseable expression text, with 1-based position."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


def _check_label(label: str) -> None:
    if not _LABEL_RE.match(label):
        raise MalformedExpressionError(f"bad label {label!r}")


@dataclass(frozen=True)
class AddVertex:
    label: str

    def __post_init__(self):
        _check_label(self.label)


@dataclass(frozen=True)
class AddEdges:
    i: str
    j: str

    def __post_init__(self):
        _check_label(self.i)
        _check_label(self.j)
        if self.i == self.j:
            raise MalformedExpressionError("edges need two distinct labels")


@dataclass(frozen=True)
class Relabel:
    src: str
    dst: str

    def __post_init__(self):
        _check_label(self.src)
        _check_label(self.dst)
        if self.src == self.dst:
            raise MalformedExpressionError("relabel needs two distinct labels")


Op = Union[AddVertex, AddEdges, Relabel]


@dataclass(frozen=True)
class Expression:
    ops: tuple[Op, ...] = ()

    def __iter__(self) -> Iterator[Op]:
        return iter(self.ops)

    def __len__(self) -> int:
        return len(self.ops)

    def labels(self) -> frozenset[str]:
        out = set()
        for op in self.ops:
            if isinstance(op, AddVertex):
                out.add(op.label)
            elif isinstance(op, AddEdges):
                out.add(op.i)
                out.add(op.j)
            else:
                out.add(op.src)
                out.add(op.dst)
        return frozenset(out)

    def label_count(self) -> int:
        return len(self.labels())

    def vertex_count(self) -> int:
        return sum(1 for op in self.ops if isinstance(op, AddVertex))


def expression(ops: Iterable[Op]) -> Expression:
    return Expression(tuple(ops))


def evaluate(e: Expression) -> tuple[Graph, dict[int, str]]:
    """Run the expression; return the graph and the final labelling.

    AddEdges on a label with no current vertices is an error; repeating
    an AddEdges whose edges already exist is a no-op.  Relabel moves
    whatever the source class holds (possibly nothing) to the target,
    which may be a name not seen before.
    """
    classes: dict[str, int] = {}
    rows: list[int] = []
    for idx, op in enumerate(e.ops):
        if isinstance(op, AddVertex):
            classes[op.label] = classes.get(op.label, 0) | (1 << len(rows))
            rows.append(0)
        elif isinstance(op, AddEdges):
            ci = classes.get(op.i, 0)
            cj = classes.get(op.j, 0)
            if not ci or not cj:
                bad = op.i if not ci else op.j
                raise MalformedExpressionError(
                    f"label {bad!r} used before any vertex carries it", idx
                )
            m = ci
            while m:
                b = m & -m
                rows[b.bit_length() - 1] |= cj
                m ^= b
            m = cj
            while m:
                b = m & -m
                rows[b.bit_length() - 1] |= ci
                m ^= b
        else:
            moved = classes.pop(op.src, 0)
            if moved:
                classes[op.dst] = classes.get(op.dst, 0) | moved
    labelling = {}
    for lab, mask in classes.items():
        m = mask
        while m:
            b = m & -m
            labelling[b.bit_length() - 1] = lab
            m ^= b
    return Graph(len(rows), tuple(rows)), labelling


def final_classes(e: Expression) -> dict[str, int]:
    """Non-empty label classes (as vertex masks) after running e."""
    classes: dict[str, int] = {}
    count = 0
    for op in e.ops:
        if isinstance(op, AddVertex):
            classes[op.label] = classes.get(op.label, 0) | (1 << count)
            count += 1
        elif isinstance(op, Relabel):
            moved = classes.pop(op.src, 0)
            if moved:
                classes[op.dst] = classes.get(op.dst, 0) | moved
    return classes


def max_labels_in_use(e: Expression) -> int:
    """Largest number of simultaneously non-empty classes while running e."""
    classes: dict[str, int] = {}
    count = 0
    best = 0
    for op in e.ops:
        if isinstance(op, AddVertex):
            classes[op.label] = classes.get(op.label, 0) | (1 << count)
            count += 1
        elif isinstance(op, Relabel):
            moved = classes.pop(op.src, 0)
            if moved:
                classes[op.dst] = classes.get(op.dst, 0) | moved
        best = max(best, len(classes))
    return best


def validate_builds(
    e: Expression,
    g: Graph,
    *,
    isomorphic: bool = False,
    vertex_map: tuple[int, ...] | None = None,
) -> bool:
    """Does e build g?

    Default is exact identity: inserted vertex t must be g's vertex t.
    With vertex_map, inserted vertex t must be g's vertex vertex_map[t].
    With isomorphic=True any isomorphic result counts (n <= 10 only;
    beyond that pass an explicit vertex_map instead).
    """
    built, _ = evaluate(e)
    if vertex_map is not None:
        if built.n != g.n or len(vertex_map) != g.n:
            return False
        return permute(built, list(vertex_map)) == g
    if isomorphic:
        if g.n > 10:
            raise ValueError("isomorphism mode supports at most 10 vertices")
        if built.n != g.n:
            return False
        return canonical_form(built) == canonical_form(g)
    return built == g


# ---------------------------------------------------------------------------
# Text form.
# ---------------------------------------------------------------------------

_OPCODES = {"v": 1, "e": 2, "r": 2}


def parse(text: str) -> Expression:
    ops: list[Op] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        hash_at = raw.find("#")
        line = raw if hash_at < 0 else raw[:hash_at]
        tokens = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]
        if not tokens:
            continue
        opcode, col = tokens[0]
        if opcode not in _OPCODES:
            raise ExpressionSyntaxError(f"unknown operation {opcode!r}", lineno, col)
        arity = _OPCODES[opcode]
        if len(tokens) - 1 != arity:
            where = tokens[arity + 1][1] if len(tokens) - 1 > arity else len(line) + 1
            raise ExpressionSyntaxError(
                f"operation {opcode!r} takes {arity} label(s)", lineno, where
            )
        for tok, tcol in tokens[1:]:
            if not _LABEL_RE.match(tok):
                raise ExpressionSyntaxError(f"bad label {tok!r}", lineno, tcol)
        args = [tok for tok, _ in tokens[1:]]
        if opcode == "v":
            ops.append(AddVertex(args[0]))
        elif opcode == "e":
            ops.append(AddEdges(args[0], args[1]))
        else:
            ops.append(Relabel(args[0], args[1]))
    return Expression(tuple(ops))


def serialize(e: Expression) -> str:
    lines = []
    for op in e.ops:
        if isinstance(op, AddVertex):
            lines.append(f"v {op.label}")
        elif isinstance(op, AddEdges):
            lines.append(f"e {op.i} {op.j}")
        else:
            lines.append(f"r {op.src} {op.dst}")
    return "".join(line + "\n" for line in lines)


def fresh_label(used: Iterable[str]) -> str:
    taken = set(used)
    i = 0
    while f"{FRESH_PREFIX}{i}" in taken:
        i += 1
    return f"{FRESH_PREFIX}{i}"


def fresh_labels(used: Iterable[str], count: int) -> list[str]:
    taken = set(used)
    out: list[str] = []
    i = 0
    while len(out) < count:
        name = f"{FRESH_PREFIX}{i}"
        if name not in taken:
            out.append(name)
            taken.add(name)
        i += 1
    return out
