"""Self-contained verification checks behind the acceptance suite.

Each check exercises one advertised guarantee end to end, typically by
sweeping an exhaustively enumerated instance family and comparing two
independent routes to the same answer (solver vs. raw oracle, shape
recognizer vs. forbidden-subgraph recognizer, constructed expression
vs. target graph).  Checks are pure functions of a shared context that
caches exact widths and owns the random source, so a full run is
deterministic.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .enumeration import enumerate_cographs, enumerate_graphs
from .expr import Expression, evaluate, max_labels_in_use, validate_builds
from .cotree import (
    build_cotree,
    is_quasi_threshold_cotree,
    is_threshold_cotree,
)
from .graphs import (
    Graph,
    canonical_form,
    complement,
    complete_graph,
    disjoint_union,
    empty_graph,
    has_lcw_at_most_2,
    inflate,
    is_cograph,
    is_quasi_threshold,
    is_threshold,
    join,
)
from .solver import (
    SolverConfig,
    all_efficient_sink_free,
    exists_sink_expression,
    lcw_at_most,
    lcw_exact,
    naive_oracle_lcw,
)
from .transforms import (
    complement_expression,
    compose_inflation,
    generate_gk,
    sink_labels,
    upper_bound_expression,
)


@dataclass(frozen=True)
class CheckResult:
    criterion: str
    passed: bool
    blocking: bool
    detail: str
    millis: int


@dataclass
class VerificationContext:
    """Shared state for a verification run.

    ``max_n`` trims the exhaustive sweeps (useful interactively); the
    acceptance suite runs with the defaults.  ``stretch_budget`` caps
    the one deliberately oversized search.
    """

    config: SolverConfig = field(default_factory=SolverConfig)
    seed: int = 0
    max_n: int | None = None
    stretch_budget: int = 300_000
    _lcw_cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.rng = random.Random(self.seed)

    def cap(self, n: int) -> int:
        return n if self.max_n is None else min(n, self.max_n)

    def lcw(self, g: Graph) -> tuple[int, Expression]:
        key = canonical_form(g)
        hit = self._lcw_cache.get(key)
        if hit is None:
            hit = self._lcw_cache[key] = lcw_exact(g, self.config)
        return hit


def _two_k2() -> Graph:
    return disjoint_union(complete_graph(2), complete_graph(2))


def check_gk_small_exact(ctx: VerificationContext):
    """The first two doubling/apex graphs have widths 2 and 3."""
    g1, _ = generate_gk(1)
    g2, _ = generate_gk(2)
    k1, w1 = ctx.lcw(g1)
    k2, w2 = ctx.lcw(g2)
    ok = (
        k1 == 2
        and k2 == 3
        and validate_builds(w1, g1, isomorphic=True)
        and validate_builds(w2, g2, isomorphic=True)
    )
    return ok, f"width(level 1)={k1} (want 2), width(level 2)={k2} (want 3), witnesses validated"


def check_gk3_expression(ctx: VerificationContext):
    """Level 3 of the family: 37 vertices from just 4 labels."""
    g, e = generate_gk(3)
    labs = max_labels_in_use(e)
    ok = (
        g.n == 37
        and labs == 4
        and validate_builds(e, g)
        and is_quasi_threshold(g)
    )
    return ok, f"n={g.n} (want 37), labels={labs} (want 4), builds target, quasi-threshold"


def check_complement_bound(ctx: VerificationContext):
    """Complementing changes the width by at most one, constructively."""
    top = ctx.cap(8)
    checked = 0
    for n in range(1, top + 1):
        for g in enumerate_cographs(n):
            k, w = ctx.lcw(g)
            ck, _ = ctx.lcw(complement(g))
            if abs(k - ck) > 1:
                return False, f"widths {k} vs {ck} differ by >1 on n={n} {g.edges()}"
            ce = complement_expression(w)
            cg, _ = evaluate(ce)
            if canonical_form(cg) != canonical_form(complement(evaluate(w)[0])):
                return False, f"complement expression builds wrong graph on n={n} {g.edges()}"
            if max_labels_in_use(ce) > k + 1:
                return False, f"complement expression exceeds k+1 labels on n={n} {g.edges()}"
            checked += 1
    return True, f"bound and constructive complement hold on {checked} cographs (n<={top})"


def check_sink_growth(ctx: VerificationContext):
    """A single edge admits no sink in any 2-label build, and doubling
    it both raises the width to 3 and makes a sink available."""
    k2 = complete_graph(2)
    if not all_efficient_sink_free(k2, ctx.config):
        return False, "found a sink label in a minimum build of a single edge"
    g = _two_k2()
    k, _ = ctx.lcw(g)
    if k != 3:
        return False, f"width of two disjoint edges is {k}, want 3"
    d = exists_sink_expression(g, 3, ctx.config)
    if not d.is_yes:
        return False, f"no 3-label sink build found for two disjoint edges ({d.outcome})"
    w = d.witness
    regular = w.labels() - sink_labels(w)
    if not validate_builds(w, g, isomorphic=True) or len(regular) > 2:
        return False, "sink witness invalid or uses more than 2 non-sink labels"
    return True, "single edge sink-free at width 2; doubled edge has width 3 with a sink witness"


def check_apex_collapse(ctx: VerificationContext):
    """Joining an apex to the doubled graph does not raise the width,
    yet the level-2 graph admits no 3-label sink build."""
    g = join(empty_graph(1), disjoint_union(_two_k2(), _two_k2()))
    k, w = ctx.lcw(g)
    if k != 3 or not validate_builds(w, g, isomorphic=True):
        return False, f"apex over doubled pair has width {k}, want 3"
    g2, _ = generate_gk(2)
    d = exists_sink_expression(g2, 3, ctx.config)
    if not d.is_no:
        return False, f"sink search on level-2 graph returned {d.outcome}, want no"
    return True, f"apex graph width 3; level-2 sink search exhausted ({d.states} states, no)"


def check_stretch_double(ctx: VerificationContext):
    """Budgeted probe: two copies of the level-2 graph at 3 labels.

    The known answer is no.  Deciding "no" or running out of budget
    both pass (the instance is beyond the exact engine's comfortable
    range); only a claimed "yes" fails.
    """
    g2, _ = generate_gk(2)
    gg = disjoint_union(g2, g2)
    cfg = SolverConfig(
        node_budget=ctx.stretch_budget,
        saturation=ctx.config.saturation,
        dominance=ctx.config.dominance,
        twin_pruning=True,
        jobs=ctx.config.jobs,
    )
    d = lcw_at_most(gg, 3, cfg)
    if d.is_yes:
        return False, "claimed a 3-label build of the doubled level-2 graph"
    word = "decided no" if d.is_no else "undecided"
    return True, f"{word} after {d.states} states (budget {ctx.stretch_budget})"


def check_oracle_equivalence(ctx: VerificationContext):
    """Reduced search agrees with the raw operation-sequence oracle."""
    top = ctx.cap(5)
    checked = 0
    for n in range(1, top + 1):
        for g in enumerate_graphs(n):
            for k in range(1, min(n, 4) + 1):
                fast = lcw_at_most(g, k, ctx.config)
                slow = naive_oracle_lcw(g, k)
                if fast.is_yes != slow.is_yes:
                    return False, (
                        f"disagree on n={n} {g.edges()} k={k}: "
                        f"search={fast.outcome} oracle={slow.outcome}"
                    )
                if fast.is_yes and not validate_builds(fast.witness, g, isomorphic=True):
                    return False, f"invalid witness on n={n} {g.edges()} k={k}"
                checked += 1
    return True, f"search and oracle agree on {checked} (graph, k) instances (n<={top})"


def check_two_label_characterization(ctx: VerificationContext):
    """Width <= 2 exactly when the three small obstructions are absent."""
    twin_cfg = SolverConfig(
        node_budget=ctx.config.node_budget,
        saturation=ctx.config.saturation,
        dominance=ctx.config.dominance,
        twin_pruning=True,
        jobs=ctx.config.jobs,
    )
    for n in range(1, ctx.cap(5) + 1):
        for g in enumerate_graphs(n):
            if lcw_at_most(g, 2, twin_cfg).is_yes != lcw_at_most(g, 2, ctx.config).is_yes:
                return False, f"twin-reduced search diverges on n={n} {g.edges()}"
    top = ctx.cap(7)
    checked = 0
    for n in range(1, top + 1):
        for g in enumerate_graphs(n):
            if lcw_at_most(g, 2, twin_cfg).is_yes != has_lcw_at_most_2(g):
                return False, f"characterization fails on n={n} {g.edges()}"
            checked += 1
    return True, f"pattern test matches exact search on {checked} graphs (n<={top})"


def check_inflation_label_bound(ctx: VerificationContext):
    """Composed inflations build the exact graph within the label bound."""
    trials = 200
    pool_small = [g for n in range(1, 5) for g in enumerate_cographs(n)]
    pool_quot = [g for n in range(2, 6) for g in enumerate_cographs(n)]
    for t in range(trials):
        quot = ctx.rng.choice(pool_quot)
        parts = [ctx.rng.choice(pool_small) for _ in range(quot.n)]
        _, eq = ctx.lcw(quot)
        part_exprs = []
        for p in parts:
            _, ep = ctx.lcw(p)
            part_exprs.append(ep)
        composed = compose_inflation(eq, part_exprs)
        built, _ = evaluate(composed)
        quot_graph = evaluate(eq)[0]
        expected = inflate(quot_graph, [evaluate(ep)[0] for ep in part_exprs])
        if built != expected:
            return False, f"trial {t}: composed graph differs from direct inflation"
        big = [max_labels_in_use(ep) for p, ep in zip(parts, part_exprs) if p.n > 1]
        bound = max_labels_in_use(eq) + (max(big) if big else 0)
        if max_labels_in_use(composed) > bound:
            return False, (
                f"trial {t}: {max_labels_in_use(composed)} labels exceeds bound {bound}"
            )
    return True, f"{trials} random compositions exact and within the label bound"


def check_factorization_upper_bound(ctx: VerificationContext):
    """The factorization-based construction is valid and near-optimal:
    it uses at most twice the factorization depth, and never fewer
    labels than the exact width."""
    top = ctx.cap(8)
    checked = 0
    for n in range(1, top + 1):
        for g in enumerate_cographs(n):
            ub = upper_bound_expression(g)
            labs = max_labels_in_use(ub.expression)
            if not validate_builds(ub.expression, g, vertex_map=ub.vertex_map):
                return False, f"upper-bound expression wrong on n={n} {g.edges()}"
            if labs > 2 * ub.depth:
                return False, (
                    f"n={n} {g.edges()}: {labs} labels exceeds twice depth {ub.depth}"
                )
            if ctx.lcw(g)[0] > labs:
                return False, f"n={n} {g.edges()}: exact width exceeds upper bound"
            checked += 1
    return True, f"bound holds on {checked} cographs (n<={top})"


def check_cotree_recognizers(ctx: VerificationContext):
    """Tree-shape recognizers agree with forbidden-subgraph tests."""
    from .cotree import NotCographError

    for n in range(1, ctx.cap(6) + 1):
        for g in enumerate_graphs(n):
            built = True
            try:
                build_cotree(g)
            except NotCographError:
                built = False
            if built != is_cograph(g):
                return False, f"cotree construction disagrees on n={n} {g.edges()}"
    top = ctx.cap(8)
    checked = 0
    for n in range(1, top + 1):
        for g in enumerate_cographs(n):
            c = build_cotree(g)
            if is_quasi_threshold_cotree(c) != is_quasi_threshold(g):
                return False, f"quasi-threshold recognizers split on n={n} {g.edges()}"
            if is_threshold_cotree(c) != is_threshold(g):
                return False, f"threshold recognizers split on n={n} {g.edges()}"
            checked += 1
    return True, f"recognizer pairs agree on {checked} cographs (n<={top})"


# Ordered registry: (id, blocking, function).
CHECKS: tuple[tuple[str, bool], ...] = (
    ("gk-small-exact", True),
    ("gk3-expression", True),
    ("complement-bound", True),
    ("sink-growth", True),
    ("apex-collapse", True),
    ("stretch-double", False),
    ("oracle-equivalence", True),
    ("two-label-characterization", True),
    ("inflation-label-bound", True),
    ("factorization-upper-bound", True),
    ("cotree-recognizers", True),
)

_FUNCS = {
    "gk-small-exact": check_gk_small_exact,
    "gk3-expression": check_gk3_expression,
    "complement-bound": check_complement_bound,
    "sink-growth": check_sink_growth,
    "apex-collapse": check_apex_collapse,
    "stretch-double": check_stretch_double,
    "oracle-equivalence": check_oracle_equivalence,
    "two-label-characterization": check_two_label_characterization,
    "inflation-label-bound": check_inflation_label_bound,
    "factorization-upper-bound": check_factorization_upper_bound,
    "cotree-recognizers": check_cotree_recognizers,
}

CHECK_IDS = tuple(name for name, _ in CHECKS)


def run_check(name: str, ctx: VerificationContext | None = None) -> CheckResult:
    if name not in _FUNCS:
        raise KeyError(f"unknown check {name!r}")
    ctx = ctx or VerificationContext()
    blocking = dict(CHECKS)[name]
    t0 = time.monotonic()
    try:
        passed, detail = _FUNCS[name](ctx)
    except Exception as exc:  # a crashed check is a failed check
        passed, detail = False, f"raised {type(exc).__name__}: {exc}"
    millis = int((time.monotonic() - t0) * 1000)
    return CheckResult(name, passed, blocking, detail, millis)


def run_all(
    ctx: VerificationContext | None = None, names: list[str] | None = None
) -> list[CheckResult]:
    ctx = ctx or VerificationContext()
    return [run_check(n, ctx) for n in (names or list(CHECK_IDS))]
