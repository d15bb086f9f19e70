"""Command-line front end.

Subcommands mirror the library surface: ``recognize`` classifies a
graph, ``lcw`` decides or bounds its width, ``expr`` evaluates and
rewrites expression files, ``gen`` produces named instance families
and ``verify`` runs the acceptance checks.  Reports are stable
``key: value`` lines on stdout.

Exit codes: 0 success, 1 a checked property failed, 2 bad input,
3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .cotree import NotCographError, build_cotree, format_cotree
from .enumeration import (
    enumerate_cographs,
    enumerate_graphs,
    threshold_graph_from_sequence,
)
from .expr import (
    Expression,
    ExpressionSyntaxError,
    MalformedExpressionError,
    evaluate,
    final_classes,
    max_labels_in_use,
    parse,
    serialize,
    validate_builds,
)
from .formats import (
    FormatError,
    format_edgelist,
    graph6_encode,
    parse_edgelist,
    parse_graph6_lines,
)
from .graphs import Graph, has_lcw_at_most_2, is_cograph, is_quasi_threshold, is_threshold
from .solver import (
    BudgetExhaustedError,
    SolverConfig,
    exists_sink_expression,
    lcw_at_most,
    lcw_exact,
)
from .transforms import (
    NotThresholdError,
    complement_expression,
    compose_inflation,
    generate_gk,
    normalize_insertion_label,
    preserve_label,
    threshold_expression,
    upper_bound_expression,
)
from .verify import CHECK_IDS, VerificationContext, run_all

EXIT_OK = 0
EXIT_PROPERTY = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

BUDGET_ENV = "LCWLAB_BUDGET"


class CLIInputError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CLIInputError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise CLIInputError(f"cannot write {path}: {exc.strerror or exc}") from exc


def _sniff_format(path: str) -> str:
    if path.endswith(".g6"):
        return "g6"
    if path.endswith(".lcw"):
        return "lcw"
    return "edgelist"


def _load_graph(path: str, fmt: str | None) -> Graph:
    fmt = fmt or _sniff_format(path)
    text = _read_text(path)
    if fmt == "g6":
        graphs = parse_graph6_lines(text)
        if not graphs:
            raise CLIInputError(f"{path}: no graph6 lines found")
        if len(graphs) > 1:
            raise CLIInputError(f"{path}: expected one graph, found {len(graphs)}")
        return graphs[0]
    if fmt == "lcw":
        g, _ = evaluate(parse(text))
        return g
    return parse_edgelist(text)


def _load_expression(path: str) -> Expression:
    return parse(_read_text(path))


def _format_graph(g: Graph, fmt: str) -> str:
    if fmt == "g6":
        return graph6_encode(g) + "\n"
    return format_edgelist(g)


def _report(pairs) -> None:
    for key, value in pairs:
        print(f"{key}: {value}")


def _solver_config(args) -> SolverConfig:
    budget = getattr(args, "budget", None)
    if budget is None:
        env = os.environ.get(BUDGET_ENV)
        if env is not None:
            try:
                budget = int(env)
            except ValueError:
                raise CLIInputError(f"{BUDGET_ENV} must be an integer, got {env!r}")
    kwargs = {}
    if budget is not None:
        kwargs["node_budget"] = budget
    jobs = getattr(args, "jobs", None)
    if jobs is not None:
        kwargs["jobs"] = jobs
    return SolverConfig(**kwargs)


# ---------------------------------------------------------------------------
# Subcommands.
# ---------------------------------------------------------------------------


def cmd_recognize(args) -> int:
    g = _load_graph(args.input, args.format)
    pairs = [
        ("vertices", g.n),
        ("edges", g.edge_count()),
        ("cograph", "yes" if is_cograph(g) else "no"),
        ("quasi-threshold", "yes" if is_quasi_threshold(g) else "no"),
        ("threshold", "yes" if is_threshold(g) else "no"),
        ("two-label-buildable", "yes" if has_lcw_at_most_2(g) else "no"),
    ]
    if is_cograph(g) and g.n > 0:
        pairs.append(("cotree", format_cotree(build_cotree(g))))
    _report(pairs)
    return EXIT_OK


def cmd_lcw(args) -> int:
    g = _load_graph(args.input, args.format)
    cfg = _solver_config(args)
    if args.upper:
        ub = upper_bound_expression(g)
        _report(
            [
                ("upper-bound", max_labels_in_use(ub.expression)),
                ("depth", ub.depth),
                ("vertex-map", ",".join(map(str, ub.vertex_map))),
            ]
        )
        if args.witness_out:
            _write_text(args.witness_out, serialize(ub.expression))
        return EXIT_OK
    if args.max_labels is not None:
        if args.sink:
            d = exists_sink_expression(g, args.max_labels, cfg)
        else:
            d = lcw_at_most(g, args.max_labels, cfg)
        _report([("outcome", d.outcome), ("states", d.states)])
        if d.is_yes and args.witness_out:
            _write_text(args.witness_out, serialize(d.witness))
        return EXIT_BUDGET if d.exhausted else EXIT_OK
    if args.sink:
        raise CLIInputError("--sink requires --max-labels")
    width, witness = lcw_exact(g, cfg)
    _report([("width", width), ("witness-labels", max_labels_in_use(witness))])
    if args.witness_out:
        _write_text(args.witness_out, serialize(witness))
    return EXIT_OK


def cmd_expr_eval(args) -> int:
    e = _load_expression(args.input)
    g, _ = evaluate(e)
    classes = final_classes(e)
    shown = " ".join(f"{k}:{v.bit_count()}" for k, v in sorted(classes.items()))
    _report(
        [
            ("vertices", g.n),
            ("edges", g.edge_count()),
            ("labels-used", max_labels_in_use(e)),
            ("final-classes", shown),
        ]
    )
    if args.out:
        _write_text(args.out, _format_graph(g, args.out_format))
    return EXIT_OK


def cmd_expr_check(args) -> int:
    e = _load_expression(args.input)
    g = _load_graph(args.graph, args.format)
    vertex_map = None
    if args.vertex_map:
        try:
            vertex_map = tuple(int(x) for x in args.vertex_map.split(","))
        except ValueError:
            raise CLIInputError("--vertex-map must be a comma-separated permutation")
    ok = validate_builds(e, g, isomorphic=args.isomorphic, vertex_map=vertex_map)
    mode = "isomorphic" if args.isomorphic else ("mapped" if vertex_map else "exact")
    _report([("mode", mode), ("builds", "yes" if ok else "no")])
    return EXIT_OK if ok else EXIT_PROPERTY


def _rewrite(args, fn) -> int:
    e = _load_expression(args.input)
    out = fn(e)
    text = serialize(out)
    if args.out:
        _write_text(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_expr_complement(args) -> int:
    return _rewrite(args, complement_expression)


def cmd_expr_normalize(args) -> int:
    return _rewrite(args, normalize_insertion_label)


def cmd_expr_preserve(args) -> int:
    return _rewrite(args, lambda e: preserve_label(e, args.label))


def cmd_expr_inflate(args) -> int:
    quot = _load_expression(args.quotient)
    parts = [_load_expression(p) for p in args.parts]
    composed = compose_inflation(quot, parts)
    text = serialize(composed)
    if args.out:
        _write_text(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.kind == "gk":
        level = args.k
        if level < 1 or level > 6:
            raise CLIInputError("level must be between 1 and 6")
        g, e = generate_gk(level)
        _report([("level", level), ("vertices", g.n), ("labels", max_labels_in_use(e))])
        if args.out:
            _write_text(args.out, _format_graph(g, args.out_format))
        if args.expr_out:
            _write_text(args.expr_out, serialize(e))
        return EXIT_OK
    if args.kind == "threshold":
        g = threshold_graph_from_sequence(args.seq)
        e, order = threshold_expression(g)
        _report(
            [
                ("vertices", g.n),
                ("edges", g.edge_count()),
                ("labels", max_labels_in_use(e)),
                ("order", ",".join(map(str, order))),
            ]
        )
        if args.out:
            _write_text(args.out, _format_graph(g, args.out_format))
        if args.expr_out:
            _write_text(args.expr_out, serialize(e))
        return EXIT_OK
    # bulk families
    n = args.k
    if args.kind == "cographs":
        if n < 1 or n > 10:
            raise CLIInputError("cograph enumeration supports 1 <= n <= 10")
        graphs = enumerate_cographs(n)
    else:  # all-graphs
        if n < 1 or n > 7:
            raise CLIInputError("graph enumeration supports 1 <= n <= 7")
        graphs = enumerate_graphs(n)
    if args.out_format == "edgelist":
        text = "\n".join(format_edgelist(g) for g in graphs)
    else:
        text = "".join(graph6_encode(g) + "\n" for g in graphs)
    if args.out:
        _write_text(args.out, text)
    else:
        sys.stdout.write(text)
    print(f"count: {len(graphs)}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(CHECK_IDS)
    if args.checks:
        names = [s.strip() for s in args.checks.split(",") if s.strip()]
        unknown = [s for s in names if s not in CHECK_IDS]
        if unknown:
            raise CLIInputError(
                f"unknown checks: {', '.join(unknown)} (known: {', '.join(CHECK_IDS)})"
            )
    ctx = VerificationContext(
        config=_solver_config(args), seed=args.seed, max_n=args.max_n
    )
    results = run_all(ctx, names)
    worst = EXIT_OK
    for r in results:
        status = "pass" if r.passed else "FAIL"
        flag = "" if r.blocking else " [non-blocking]"
        print(f"check {r.criterion}: {status}{flag} ({r.millis} ms) {r.detail}")
        if not r.passed and r.blocking:
            worst = EXIT_PROPERTY
    print(f"result: {'pass' if worst == EXIT_OK else 'fail'}")
    return worst


# ---------------------------------------------------------------------------
# Parser.
# ---------------------------------------------------------------------------


def _add_graph_input(p) -> None:
    p.add_argument("input", help="graph file, '-' for stdin")
    p.add_argument(
        "--format",
        choices=["edgelist", "g6", "lcw"],
        help="input format (default: sniffed from the extension)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lcwlab",
        description="Linear construction expressions for cographs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="classify a graph")
    _add_graph_input(p)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("lcw", help="decide or bound the minimum label count")
    _add_graph_input(p)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="exact width (default)")
    mode.add_argument(
        "--upper", action="store_true", help="factorization upper bound (cographs)"
    )
    mode.add_argument(
        "--max-labels", type=int, metavar="K", help="decide width <= K only"
    )
    p.add_argument(
        "--sink",
        action="store_true",
        help="with --max-labels: require one label to be a sink",
    )
    p.add_argument("--budget", type=int, help=f"state budget (or ${BUDGET_ENV})")
    p.add_argument("--jobs", type=int, help="parallel expansion width")
    p.add_argument("--witness-out", metavar="PATH", help="write a witness expression")
    p.set_defaults(func=cmd_lcw)

    p = sub.add_parser("expr", help="evaluate and rewrite expressions")
    esub = p.add_subparsers(dest="expr_command", required=True)

    q = esub.add_parser("eval", help="evaluate an expression file")
    q.add_argument("input", help="expression file, '-' for stdin")
    q.add_argument("--out", metavar="PATH", help="write the built graph")
    q.add_argument(
        "--out-format", choices=["edgelist", "g6"], default="edgelist"
    )
    q.set_defaults(func=cmd_expr_eval)

    q = esub.add_parser("check", help="does an expression build a graph?")
    q.add_argument("input", help="expression file, '-' for stdin")
    q.add_argument("graph", help="graph file")
    q.add_argument("--format", choices=["edgelist", "g6", "lcw"])
    q.add_argument(
        "--isomorphic", action="store_true", help="compare up to isomorphism"
    )
    q.add_argument(
        "--vertex-map",
        metavar="CSV",
        help="insertion order: position t builds graph vertex CSV[t]",
    )
    q.set_defaults(func=cmd_expr_check)

    for name, helptext, fn in [
        ("complement", "complement the built graph, same labels plus one", cmd_expr_complement),
        ("normalize", "rewrite into insertion-label normal form", cmd_expr_normalize),
    ]:
        q = esub.add_parser(name, help=helptext)
        q.add_argument("input", help="expression file, '-' for stdin")
        q.add_argument("--out", metavar="PATH")
        q.set_defaults(func=fn)

    q = esub.add_parser("preserve", help="keep a label alive to the end")
    q.add_argument("input", help="expression file, '-' for stdin")
    q.add_argument("label")
    q.add_argument("--out", metavar="PATH")
    q.set_defaults(func=cmd_expr_preserve)

    q = esub.add_parser("inflate", help="substitute part expressions into a quotient")
    q.add_argument("quotient", help="quotient expression file")
    q.add_argument("parts", nargs="+", help="one part expression file per vertex")
    q.add_argument("--out", metavar="PATH")
    q.set_defaults(func=cmd_expr_inflate)

    p = sub.add_parser("gen", help="generate instance families")
    gsub = p.add_subparsers(dest="kind", required=True)

    q = gsub.add_parser("gk", help="doubling/apex family member")
    q.add_argument("k", type=int, help="level (1..6)")
    q.add_argument("--out", metavar="PATH", help="write the graph")
    q.add_argument("--out-format", choices=["edgelist", "g6"], default="edgelist")
    q.add_argument("--expr-out", metavar="PATH", help="write the expression")
    q.set_defaults(func=cmd_gen)

    q = gsub.add_parser("threshold", help="threshold graph from an i/d sequence")
    q.add_argument("seq", help="creation sequence over i (isolated) / d (dominating)")
    q.add_argument("--out", metavar="PATH")
    q.add_argument("--out-format", choices=["edgelist", "g6"], default="edgelist")
    q.add_argument("--expr-out", metavar="PATH")
    q.set_defaults(func=cmd_gen)

    for name, helptext in [
        ("cographs", "all cographs on n vertices, one per class"),
        ("all-graphs", "all graphs on n vertices, one per class"),
    ]:
        q = gsub.add_parser(name, help=helptext)
        q.add_argument("k", type=int, metavar="n")
        q.add_argument("--out", metavar="PATH")
        q.add_argument("--out-format", choices=["edgelist", "g6"], default="g6")
        q.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="run the acceptance checks")
    p.add_argument("--checks", metavar="CSV", help="subset of check ids")
    p.add_argument("--max-n", type=int, help="trim exhaustive sweeps to n <= N")
    p.add_argument("--budget", type=int, help=f"state budget (or ${BUDGET_ENV})")
    p.add_argument("--jobs", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CLIInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (
        ExpressionSyntaxError,
        FormatError,
        MalformedExpressionError,
        NotCographError,
        NotThresholdError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExhaustedError as exc:
        print(f"budget exhausted after {exc.states} states", file=sys.stderr)
        lower = exc.lower
        upper = "-" if exc.upper is None else exc.upper
        _report([("outcome", "budget"), ("lower", lower), ("upper", upper)])
        return EXIT_BUDGET


if __name__ == "__main__":
    raise SystemExit(main())
