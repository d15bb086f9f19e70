"""Linear construction expressions for cographs: build graphs left to
right with labelled vertex insertions, bulk edge additions between
label classes and relabellings, decide the minimum number of labels
exactly, and manipulate expressions structurally (complement, double,
pivot, inflate) with predictable label overhead.
"""

from .cotree import (
    Cotree,
    CotreeFormatError,
    Factorization,
    NotCographError,
    build_cotree,
    canonicalize,
    cotree_to_graph,
    factorization_graph,
    format_cotree,
    is_quasi_threshold_cotree,
    is_threshold_cotree,
    parse_cotree,
    threshold_factorize,
)
from .expr import (
    AddEdges,
    AddVertex,
    Expression,
    ExpressionSyntaxError,
    MalformedExpressionError,
    Relabel,
    evaluate,
    expression,
    final_classes,
    fresh_label,
    max_labels_in_use,
    parse,
    serialize,
    validate_builds,
)
from .formats import (
    FormatError,
    format_edgelist,
    format_graph6_lines,
    graph6_decode,
    graph6_encode,
    parse_edgelist,
    parse_graph6_lines,
)
from .graphs import (
    Graph,
    complement,
    complete_graph,
    contains_induced,
    cycle_graph,
    disjoint_union,
    empty_graph,
    has_lcw_at_most_2,
    induced_subgraph,
    inflate,
    is_cograph,
    is_isomorphic,
    is_quasi_threshold,
    is_threshold,
    join,
    path_graph,
    permute,
    star_graph,
)
from .solver import (
    BudgetExhaustedError,
    Decision,
    SolverConfig,
    all_efficient_sink_free,
    exists_sink_expression,
    lcw_at_most,
    lcw_exact,
    naive_oracle_lcw,
)
from .transforms import (
    EdgelessInputError,
    NotASinkError,
    NotThresholdError,
    UnusedLabelError,
    UpperBound,
    complement_expression,
    compose_inflation,
    double_with_new_label,
    generate_gk,
    is_sink_free,
    normalize_insertion_label,
    pivot_construction,
    preserve_label,
    sink_labels,
    threshold_expression,
    upper_bound_expression,
)

__version__ = "0.1.0"

__all__ = [
    "AddEdges",
    "AddVertex",
    "BudgetExhaustedError",
    "Cotree",
    "CotreeFormatError",
    "Decision",
    "EdgelessInputError",
    "Expression",
    "ExpressionSyntaxError",
    "Factorization",
    "FormatError",
    "Graph",
    "MalformedExpressionError",
    "NotASinkError",
    "NotCographError",
    "NotThresholdError",
    "Relabel",
    "SolverConfig",
    "UnusedLabelError",
    "UpperBound",
    "all_efficient_sink_free",
    "build_cotree",
    "canonicalize",
    "complement",
    "complement_expression",
    "complete_graph",
    "compose_inflation",
    "contains_induced",
    "cotree_to_graph",
    "cycle_graph",
    "disjoint_union",
    "double_with_new_label",
    "empty_graph",
    "evaluate",
    "exists_sink_expression",
    "expression",
    "factorization_graph",
    "final_classes",
    "format_cotree",
    "format_edgelist",
    "format_graph6_lines",
    "fresh_label",
    "generate_gk",
    "graph6_decode",
    "graph6_encode",
    "has_lcw_at_most_2",
    "induced_subgraph",
    "inflate",
    "is_cograph",
    "is_isomorphic",
    "is_quasi_threshold",
    "is_quasi_threshold_cotree",
    "is_sink_free",
    "is_threshold",
    "is_threshold_cotree",
    "join",
    "lcw_at_most",
    "lcw_exact",
    "max_labels_in_use",
    "naive_oracle_lcw",
    "normalize_insertion_label",
    "parse",
    "parse_cotree",
    "parse_edgelist",
    "parse_graph6_lines",
    "path_graph",
    "permute",
    "pivot_construction",
    "preserve_label",
    "serialize",
    "sink_labels",
    "star_graph",
    "threshold_expression",
    "threshold_factorize",
    "upper_bound_expression",
    "validate_builds",
]
