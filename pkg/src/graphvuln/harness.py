"""Corpus-wide verification suite and the degree-formula fast-path benchmark.

run_suite sweeps a deterministic corpus (exhaustive small graphs, all
labeled trees up to a cap, named families, seeded random graphs) and
verifies every identity, inequality, interval and closed form against the
BFS oracle. Inequality/identity checks on integers compare exactly; float
comparisons use a relative tolerance. The emitted report is byte-stable:
fixed iteration order, fixed seeds, no timestamps.
"""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Callable, Iterator

from . import kernels
from .bounds import (
    SINGLE_BRANCH,
    TWO_BRANCHES,
    interval_from_order,
    interval_from_size_diameter,
    interval_triangle_quad_free,
    interval_tree_or_high_girth,
    path_closeness_closed_form,
    path_gc_closed_form,
    pendant_tree_closed_forms,
    upper_bound_radius,
)
from .generators import (
    ENUM_MAX_N,
    PendantSpec,
    SplitMix64,
    bistar_graph,
    complete_graph,
    connected_graphs,
    cycle_graph,
    labeled_trees,
    path_graph,
    pendant_tree,
    pentagon_graph,
    petersen_graph,
    random_connected_graph,
    star_graph,
)
from .graph import Graph, distance_summary, girth
from .graphio import encode_graph6
from .invariants import (
    gc_from_counts,
    reduced_zagreb_m2,
    structural_flags,
    wiener_polarity,
    zagreb_m1,
    zagreb_m2,
)
from .jsonfmt import fmt_metric

DEFAULT_ALPHAS = (0.1, 0.25, 0.5, 0.75, 0.9)
COUNTEREXAMPLE_CAP = 10
EQUALITY_EXAMPLE_CAP = 20


@dataclass(frozen=True)
class CorpusConfig:
    """Which graphs to sweep and how strictly to compare."""

    max_n: int = ENUM_MAX_N          # exhaustive connected graphs up to this n (0 = off)
    trees_max_n: int = 8             # all labeled trees up to this n (<2 = off)
    include_named: bool = True
    random_count: int = 100
    seed: int = 42
    alphas: tuple[float, ...] = DEFAULT_ALPHAS
    tolerance: float = 1e-9
    checks: tuple[str, ...] | None = None   # None means every known check
    pendant_branch_max: int = 6
    pendant_total_max: int = 12
    path_max_n: int = 64

    def to_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "trees_max_n": self.trees_max_n,
            "include_named": self.include_named,
            "random_count": self.random_count,
            "seed": self.seed,
            "alphas": [fmt_metric(a) for a in self.alphas],
            "tolerance": fmt_metric(self.tolerance),
            "checks": sorted(self.checks) if self.checks is not None else "all",
            "pendant_branch_max": self.pendant_branch_max,
            "pendant_total_max": self.pendant_total_max,
            "path_max_n": self.path_max_n,
        }


class GraphFacts:
    """Lazily computed per-graph quantities shared by all checks."""

    def __init__(self, graph: Graph, label: str, section: str = "adhoc"):
        self.graph = graph
        self.label = label
        self.section = section
        self._gc: dict[float, float] = {}

    @cached_property
    def summary(self):
        return distance_summary(self.graph)

    @property
    def counts(self):
        return self.summary.dist_counts

    @cached_property
    def m1(self) -> int:
        return zagreb_m1(self.graph)

    @cached_property
    def m2(self) -> int:
        return zagreb_m2(self.graph)

    @cached_property
    def rm2(self) -> int:
        return reduced_zagreb_m2(self.graph)

    @cached_property
    def wp(self) -> int:
        return wiener_polarity(self.graph, self.summary)

    @cached_property
    def girth(self):
        return girth(self.graph)

    @cached_property
    def flags(self):
        return structural_flags(self.graph, self.summary)

    @property
    def tq_free(self) -> bool:
        return self.flags.triangle_free and self.flags.quadrangle_free

    @cached_property
    def is_c6(self) -> bool:
        g = self.graph
        return (
            g.n == 6
            and self.summary.connected
            and g.m == 6
            and int(g.degrees.min()) == 2
            and int(g.degrees.max()) == 2
            and self.girth == 6
        )

    def gc(self, alpha: float) -> float:
        if alpha not in self._gc:
            self._gc[alpha] = gc_from_counts(self.counts, alpha)
        return self._gc[alpha]

    @property
    def closeness(self) -> float:
        return self.gc(0.5)


@dataclass
class Outcome:
    ok: bool
    slack: float | None = None
    equality_hit: bool = False
    detail: str = ""
    alpha: float | None = None


@dataclass
class CheckResult:
    check_id: str
    graphs_tested: int = 0
    passes: int = 0
    failures: int = 0
    equality_hits: int = 0
    worst_slack: float | None = None
    equality_examples: list[str] = field(default_factory=list)
    counterexamples: list[dict] = field(default_factory=list)

    def record(self, outcome: Outcome, label: str, graph: Graph) -> None:
        self.graphs_tested += 1
        if outcome.slack is not None:
            if self.worst_slack is None or outcome.slack < self.worst_slack:
                self.worst_slack = outcome.slack
        if outcome.equality_hit:
            self.equality_hits += 1
            if len(self.equality_examples) < EQUALITY_EXAMPLE_CAP:
                self.equality_examples.append(label)
        if outcome.ok:
            self.passes += 1
        else:
            self.failures += 1
            if len(self.counterexamples) < COUNTEREXAMPLE_CAP:
                try:
                    g6 = encode_graph6(graph)
                except ValueError:
                    g6 = None
                self.counterexamples.append(
                    {
                        "label": label,
                        "graph6": g6,
                        "alpha": fmt_metric(outcome.alpha),
                        "detail": outcome.detail,
                    }
                )

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "graphs_tested": self.graphs_tested,
            "passes": self.passes,
            "failures": self.failures,
            "equality_hits": self.equality_hits,
            "worst_slack": fmt_metric(self.worst_slack),
            "equality_examples": list(self.equality_examples),
            "counterexamples": list(self.counterexamples),
        }


@dataclass
class VerificationReport:
    config: CorpusConfig
    corpus_size: int
    corpus_digest: str
    checks: list[CheckResult]

    @property
    def total_failures(self) -> int:
        return sum(c.failures for c in self.checks)

    def check(self, check_id: str) -> CheckResult:
        for c in self.checks:
            if c.check_id == check_id:
                return c
        raise KeyError(check_id)

    def to_dict(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "corpus": {"graphs": self.corpus_size, "digest": self.corpus_digest},
            "checks": [c.to_dict() for c in self.checks],
            "failures_total": self.total_failures,
            "passed": self.total_failures == 0,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _rel_ok(value: float, target: float, tol: float) -> bool:
    return abs(value - target) <= tol * (1.0 + max(abs(value), abs(target)))


def _sandwich(facts: GraphFacts, cfg: CorpusConfig, make_report) -> Outcome:
    """Shared body for interval checks: containment always, equality when due."""
    worst = None
    for alpha in cfg.alphas:
        rpt = make_report(alpha)
        value = facts.gc(alpha)
        scale = cfg.tolerance * (1.0 + abs(value))
        if value < rpt.lower - scale or value > rpt.upper + scale:
            return Outcome(
                ok=False,
                alpha=alpha,
                detail=f"value {value!r} outside [{rpt.lower!r}, {rpt.upper!r}]",
            )
        if rpt.equality_expected and not (
            _rel_ok(value, rpt.lower, cfg.tolerance)
            and _rel_ok(value, rpt.upper, cfg.tolerance)
        ):
            return Outcome(
                ok=False,
                alpha=alpha,
                detail=(
                    f"equality expected but value {value!r} differs from "
                    f"[{rpt.lower!r}, {rpt.upper!r}]"
                ),
            )
        slack = min(value - rpt.lower, rpt.upper - value)
        if worst is None or slack < worst:
            worst = slack
    hit = make_report(cfg.alphas[0]).equality_expected
    return Outcome(ok=True, slack=worst, equality_hit=hit)


def _check_thm2_6(facts: GraphFacts, cfg: CorpusConfig) -> Outcome | None:
    if not facts.tq_free:
        return None
    d2 = facts.counts.get(2, 0)
    expect = facts.m1 // 2 - facts.graph.m
    ok = d2 == expect
    return Outcome(
        ok=ok,
        slack=float(abs(d2 - expect)),
        equality_hit=ok,
        detail="" if ok else f"pairs at distance 2 = {d2}, M1/2 - m = {expect}",
    )


def _check_thm2_7(facts: GraphFacts, cfg: CorpusConfig) -> Outcome | None:
    if not (facts.summary.connected and facts.tq_free):
        return None
    g = facts.graph
    bound = g.n * (g.n + 1 - int(facts.summary.radius))
    observed_eq = facts.m1 == bound
    expected_eq = facts.flags.is_moore_diam2 or facts.is_c6
    if facts.m1 > bound:
        return Outcome(ok=False, detail=f"M1 = {facts.m1} exceeds n(n+1-r) = {bound}")
    if observed_eq != expected_eq:
        return Outcome(
            ok=False,
            detail=(
                f"equality observed={observed_eq} but Moore/C6 predicate"
                f"={expected_eq} (M1={facts.m1}, bound={bound})"
            ),
        )
    return Outcome(ok=True, slack=float(bound - facts.m1), equality_hit=observed_eq)


def _check_thm2_8(facts: GraphFacts, cfg: CorpusConfig) -> Outcome | None:
    if not facts.summary.connected:
        return None
    g = facts.graph
    rhs = facts.m2 - facts.m1 + g.m
    observed_eq = facts.wp == rhs
    expected_eq = facts.flags.is_tree or facts.flags.girth_ge_7
    if facts.wp > rhs:
        return Outcome(ok=False, detail=f"W_P = {facts.wp} exceeds M2 - M1 + m = {rhs}")
    if observed_eq != expected_eq:
        return Outcome(
            ok=False,
            detail=(
                f"equality observed={observed_eq} but tree-or-girth>=7"
                f"={expected_eq} (W_P={facts.wp}, rhs={rhs})"
            ),
        )
    return Outcome(ok=True, slack=float(rhs - facts.wp), equality_hit=observed_eq)


def _check_rm2_identity(facts: GraphFacts, cfg: CorpusConfig) -> Outcome:
    g = facts.graph
    rhs = facts.m2 - facts.m1 + g.m
    ok = facts.rm2 == rhs
    return Outcome(
        ok=ok,
        slack=float(abs(facts.rm2 - rhs)),
        equality_hit=ok,
        detail="" if ok else f"RM2 = {facts.rm2}, M2 - M1 + m = {rhs}",
    )


def _check_gc_half(facts: GraphFacts, cfg: CorpusConfig) -> Outcome:
    c = facts.closeness
    g5 = facts.gc(0.5)
    ok = abs(g5 - c) <= 1e-12 * (1.0 + abs(c))
    return Outcome(
        ok=ok,
        slack=abs(g5 - c),
        detail="" if ok else f"GC(0.5) = {g5!r} vs closeness {c!r}",
    )


def _check_t3_1(facts: GraphFacts, cfg: CorpusConfig) -> Outcome | None:
    if not facts.summary.connected:
        return None
    n = facts.graph.n
    return _sandwich(facts, cfg, lambda a: interval_from_order(n, a))


def _check_t3_2(facts: GraphFacts, cfg: CorpusConfig) -> Outcome | None:
    if not facts.summary.connected or facts.summary.diameter < 1:
        return None
    g = facts.graph
    d = int(facts.summary.diameter)
    return _sandwich(facts, cfg, lambda a: interval_from_size_diameter(g.n, g.m, d, a))


def _check_t3_3(facts: GraphFacts, cfg: CorpusConfig) -> Outcome | None:
    if not (facts.summary.connected and facts.tq_free):
        return None
    g = facts.graph
    d = int(facts.summary.diameter)
    m1 = facts.m1
    return _sandwich(
        facts, cfg, lambda a: interval_triangle_quad_free(g.n, g.m, m1, d, a)
    )


def _check_t3_5(facts: GraphFacts, cfg: CorpusConfig) -> Outcome | None:
    if not facts.summary.connected:
        return None
    if not (facts.flags.is_tree or facts.flags.girth_ge_7):
        return None
    g = facts.graph
    d = int(facts.summary.diameter)
    m1, m2 = facts.m1, facts.m2
    return _sandwich(
        facts, cfg, lambda a: interval_tree_or_high_girth(g.n, g.m, m1, m2, d, a)
    )


def _check_c3_4(facts: GraphFacts, cfg: CorpusConfig) -> Outcome | None:
    if not (facts.summary.connected and facts.tq_free):
        return None
    g = facts.graph
    rpt = upper_bound_radius(
        g.n, g.m, int(facts.summary.radius),
        moore_or_c6=facts.flags.is_moore_diam2 or facts.is_c6,
    )
    value = facts.closeness
    scale = cfg.tolerance * (1.0 + abs(value))
    if value > rpt.upper + scale:
        return Outcome(
            ok=False, alpha=0.5, detail=f"closeness {value!r} exceeds bound {rpt.upper!r}"
        )
    observed_eq = _rel_ok(value, rpt.upper, cfg.tolerance)
    if rpt.equality_expected and not observed_eq:
        return Outcome(
            ok=False,
            alpha=0.5,
            detail=f"Moore/C6 equality expected but closeness {value!r} < bound {rpt.upper!r}",
        )
    return Outcome(ok=True, slack=rpt.upper - value, equality_hit=observed_eq)


def _check_thm2_5(
    facts: GraphFacts, cfg: CorpusConfig, path_refs: dict[int, dict[float, float]]
) -> Outcome | None:
    if not facts.flags.is_tree:
        return None
    refs = path_refs.get(facts.graph.n)
    if refs is None:
        refs = _path_gc_reference(facts.graph.n, cfg.alphas)
        path_refs[facts.graph.n] = refs
    worst = None
    all_equal = True
    for alpha in cfg.alphas:
        ref = refs[alpha]
        value = facts.gc(alpha)
        if value < ref - cfg.tolerance * (1.0 + abs(ref)):
            return Outcome(
                ok=False,
                alpha=alpha,
                detail=f"tree GC {value!r} below path reference {ref!r}",
            )
        slack = value - ref
        all_equal = all_equal and _rel_ok(value, ref, cfg.tolerance)
        if worst is None or slack < worst:
            worst = slack
    return Outcome(ok=True, slack=worst, equality_hit=all_equal)


def _path_gc_reference(n: int, alphas: tuple[float, ...]) -> dict[float, float]:
    counts = distance_summary(path_graph(n)).dist_counts
    return {a: gc_from_counts(counts, a) for a in alphas}


GRAPH_CHECKS: dict[str, Callable] = {
    "thm2_6": _check_thm2_6,
    "thm2_7": _check_thm2_7,
    "thm2_8": _check_thm2_8,
    "rm2_identity": _check_rm2_identity,
    "gc_half": _check_gc_half,
    "t3_1": _check_t3_1,
    "t3_2": _check_t3_2,
    "t3_3": _check_t3_3,
    "c3_4": _check_c3_4,
    "t3_5": _check_t3_5,
}

STANDALONE_CHECKS = ("thm2_5", "t3_1_path", "gc_path", "c3_10")

ALL_CHECKS = tuple(GRAPH_CHECKS) + STANDALONE_CHECKS


def run_graph_check(check_id: str, g: Graph, config: CorpusConfig | None = None) -> Outcome:
    """Re-evaluate one graph-wise check on one graph (counterexample replay)."""
    cfg = config or CorpusConfig()
    facts = GraphFacts(g, label="adhoc")
    if check_id == "thm2_5":
        outcome = _check_thm2_5(facts, cfg, {})
    elif check_id in GRAPH_CHECKS:
        outcome = GRAPH_CHECKS[check_id](facts, cfg)
    else:
        raise ValueError(f"not a graph-wise check: {check_id!r}")
    if outcome is None:
        raise ValueError(f"check {check_id!r} is not applicable to this graph")
    return outcome


def _named_corpus() -> list[tuple[str, Graph]]:
    return [
        ("petersen", petersen_graph()),
        ("pentagon", pentagon_graph()),
        ("C6", cycle_graph(6)),
        ("C7", cycle_graph(7)),
        ("K5", complete_graph(5)),
        ("P10", path_graph(10)),
        ("star9", star_graph(9)),
        ("bistar_3_4", bistar_graph(3, 4)),
        ("pendant_5_0_0_0", pendant_tree([5, 0, 0, 0])),
        ("pendant_4_1_0_0", pendant_tree([4, 1, 0, 0])),
    ]


def iter_corpus(cfg: CorpusConfig) -> Iterator[tuple[str, str, Graph]]:
    """Yield (section, label, graph) deterministically."""
    for n in range(1, cfg.max_n + 1):
        for idx, g in enumerate(connected_graphs(n)):
            yield "exhaustive", f"conn{n}_{idx}", g
    for n in range(2, cfg.trees_max_n + 1):
        for idx, g in enumerate(labeled_trees(n)):
            yield "trees", f"tree{n}_{idx}", g
    if cfg.include_named:
        for label, g in _named_corpus():
            yield "named", label, g
    if cfg.random_count:
        master = SplitMix64(cfg.seed)
        for i in range(cfg.random_count):
            n = 5 + master.below(8)
            max_extra = n * (n - 1) // 2 - (n - 1)
            extra = master.below(min(max_extra, n) + 1)
            g = random_connected_graph(n, extra, master.next_u64())
            yield "random", f"random_{i}", g


def _partitions(total: int, max_parts: int, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    """Non-increasing positive partitions of `total` into at most max_parts parts."""
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    first_cap = min(total, cap if cap is not None else total)
    for first in range(first_cap, 0, -1):
        for rest in _partitions(total - first, max_parts - 1, first):
            yield (first,) + rest


def _check_gc_path(result: CheckResult, cfg: CorpusConfig) -> None:
    for n in range(2, cfg.path_max_n + 1):
        g = path_graph(n)
        counts = distance_summary(g).dist_counts
        ok = True
        detail = ""
        worst = 0.0
        bad_alpha = None
        for alpha in cfg.alphas:
            truth = gc_from_counts(counts, alpha)
            closed = path_gc_closed_form(n, alpha)
            worst = max(worst, abs(truth - closed))
            if not _rel_ok(truth, closed, cfg.tolerance):
                ok, detail, bad_alpha = False, f"closed form {closed!r} vs BFS {truth!r}", alpha
                break
        if ok:
            half = path_gc_closed_form(n, 0.5)
            direct = path_closeness_closed_form(n)
            worst = max(worst, abs(half - direct))
            if not _rel_ok(half, direct, cfg.tolerance):
                ok, detail, bad_alpha = False, f"{half!r} != 2n-4+0.5^(n-2) = {direct!r}", 0.5
        result.record(
            Outcome(ok=ok, slack=worst, equality_hit=ok, detail=detail, alpha=bad_alpha),
            f"P{n}",
            g,
        )


def _check_t3_1_path(result: CheckResult, cfg: CorpusConfig) -> None:
    top = max(cfg.trees_max_n, 2)
    for n in range(2, top + 1):
        g = path_graph(n)
        counts = distance_summary(g).dist_counts
        ok = True
        detail = ""
        worst = 0.0
        bad_alpha = None
        for alpha in cfg.alphas:
            truth = gc_from_counts(counts, alpha)
            lower = interval_from_order(n, alpha).lower
            worst = max(worst, abs(truth - lower))
            if not _rel_ok(truth, lower, cfg.tolerance):
                ok, detail, bad_alpha = False, f"path GC {truth!r} vs lower bound {lower!r}", alpha
                break
        result.record(
            Outcome(ok=ok, slack=worst, equality_hit=ok, detail=detail, alpha=bad_alpha),
            f"P{n}",
            g,
        )


def _check_c3_10(result: CheckResult, cfg: CorpusConfig) -> None:
    for branches in range(2, cfg.pendant_branch_max + 1):
        for total in range(1, cfg.pendant_total_max + 1):
            for part in _partitions(total, branches):
                pendants = part + (0,) * (branches - len(part))
                label = "pendant_" + "_".join(map(str, pendants))
                spec = PendantSpec(pendants)
                g = pendant_tree(spec)
                facts = GraphFacts(g, label, section="generated")
                case = SINGLE_BRANCH if pendants[1] == 0 else TWO_BRANCHES
                m1 = facts.m1
                ok = True
                detail = ""
                worst = 0.0
                bad_alpha = None
                for alpha in cfg.alphas:
                    vals = pendant_tree_closed_forms(spec.n, branches, m1, case, alpha)
                    truth = facts.gc(alpha)
                    worst = max(worst, abs(truth - vals.gc))
                    if not _rel_ok(truth, vals.gc, cfg.tolerance):
                        ok = False
                        detail = f"{case} GC formula {vals.gc!r} vs BFS {truth!r}"
                        bad_alpha = alpha
                        break
                if ok:
                    vals = pendant_tree_closed_forms(spec.n, branches, m1, case, 0.5)
                    truth = facts.closeness
                    worst = max(worst, abs(truth - vals.closeness))
                    if not _rel_ok(truth, vals.closeness, cfg.tolerance):
                        ok = False
                        detail = f"{case} closeness formula {vals.closeness!r} vs BFS {truth!r}"
                        bad_alpha = 0.5
                result.record(
                    Outcome(ok=ok, slack=worst, equality_hit=ok, detail=detail, alpha=bad_alpha),
                    label,
                    g,
                )


def run_suite(
    config: CorpusConfig | None = None,
    alphas: tuple[float, ...] | None = None,
    tolerance: float | None = None,
) -> VerificationReport:
    """Run every enabled check over the configured corpus."""
    cfg = config or CorpusConfig()
    if alphas is not None:
        cfg = replace(cfg, alphas=tuple(alphas))
    if tolerance is not None:
        cfg = replace(cfg, tolerance=float(tolerance))
    enabled = set(cfg.checks) if cfg.checks is not None else set(ALL_CHECKS)
    unknown = enabled - set(ALL_CHECKS)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}; known: {sorted(ALL_CHECKS)}")

    results = {cid: CheckResult(cid) for cid in ALL_CHECKS if cid in enabled}
    graph_checks = [(cid, fn) for cid, fn in GRAPH_CHECKS.items() if cid in enabled]
    want_thm2_5 = "thm2_5" in enabled
    path_refs: dict[int, dict[float, float]] = {}

    digest = hashlib.sha256()
    corpus_size = 0
    for section, label, g in iter_corpus(cfg):
        corpus_size += 1
        digest.update(f"{section}:{label}:{encode_graph6(g)}\n".encode())
        facts = GraphFacts(g, label, section)
        for cid, fn in graph_checks:
            outcome = fn(facts, cfg)
            if outcome is not None:
                results[cid].record(outcome, label, g)
        if want_thm2_5 and section == "trees":
            outcome = _check_thm2_5(facts, cfg, path_refs)
            if outcome is not None:
                results["thm2_5"].record(outcome, label, g)

    if "t3_1_path" in enabled:
        _check_t3_1_path(results["t3_1_path"], cfg)
    if "gc_path" in enabled:
        _check_gc_path(results["gc_path"], cfg)
    if "c3_10" in enabled:
        _check_c3_10(results["c3_10"], cfg)

    ordered = [results[cid] for cid in ALL_CHECKS if cid in enabled]
    return VerificationReport(
        config=cfg,
        corpus_size=corpus_size,
        corpus_digest=digest.hexdigest(),
        checks=ordered,
    )


# --- fast-path benchmark -----------------------------------------------------

FASTPATH_FAMILIES = ("tnd", "bistar", "star", "complete", "path")


def _fastpath_graph(family: str, n: int) -> Graph:
    if family in ("tnd", "bistar"):
        if n < 4:
            raise ValueError(f"family {family} needs n >= 4, got n={n}")
        return pendant_tree([n - 3, 0])
    if family == "star":
        if n < 3:
            raise ValueError(f"star fast path needs n >= 3, got n={n}")
        return star_graph(n)
    if family == "complete":
        if n < 1:
            raise ValueError(f"complete needs n >= 1, got n={n}")
        return complete_graph(n)
    if family == "path":
        if n < 2:
            raise ValueError(f"path fast path needs n >= 2, got n={n}")
        if n > 5:
            raise ValueError(
                f"no exact degree formula for path with n={n} (diameter {n - 1} > 4)"
            )
        return path_graph(n)
    raise ValueError(f"unknown fast-path family {family!r}; have {FASTPATH_FAMILIES}")


def _fastpath_formula(family: str, g: Graph) -> float:
    """Closeness via the exact degree-based route (no BFS)."""
    n, m = g.n, g.m
    if family in ("tnd", "bistar"):
        deg = g.degrees
        m1 = int((deg * deg).sum())
        return pendant_tree_closed_forms(n, 2, m1, SINGLE_BRANCH, 0.5).closeness
    if family == "star":
        return (n * (n - 1) + 2 * m) / 4
    if family == "complete":
        return n * (n - 1) / 2
    if family == "path":
        return path_closeness_closed_form(n)
    raise ValueError(f"unknown fast-path family {family!r}")


def _bfs_closeness(g: Graph) -> float:
    return gc_from_counts(distance_summary(g).dist_counts, 0.5)


def fastpath_benchmark(
    family: str,
    sizes: list[int],
    repetitions: int = 3,
    backends: tuple[str, ...] | None = None,
) -> list[dict]:
    """Time the BFS oracle against the exact degree formula.

    Values are compared at 1e-9 relative before any timing is reported;
    a mismatch raises rather than emitting a row. One row per
    (size, kernel backend).
    """
    if repetitions < 1:
        raise ValueError(f"repetitions must be >= 1, got {repetitions}")
    chosen = backends or (kernels.active_backend(),)
    rows: list[dict] = []
    for n in sizes:
        g = _fastpath_graph(family, n)
        formula_value = _fastpath_formula(family, g)
        for backend in chosen:
            with kernels.use_backend(backend):
                kernels.warmup()
                bfs_value = _bfs_closeness(g)
                if not _rel_ok(bfs_value, formula_value, 1e-9):
                    raise RuntimeError(
                        f"fast path mismatch for {family} n={n}: "
                        f"BFS {bfs_value!r} vs formula {formula_value!r}"
                    )
                bfs_time = min(
                    _timed(lambda: _bfs_closeness(g)) for _ in range(repetitions)
                )
            formula_time = min(
                _timed(lambda: _fastpath_formula(family, g)) for _ in range(repetitions)
            )
            rows.append(
                {
                    "family": family,
                    "n": n,
                    "backend": backend,
                    "bfs_time": bfs_time,
                    "formula_time": formula_time,
                    "speedup": bfs_time / formula_time if formula_time > 0 else float("inf"),
                    "values_equal": True,
                    "closeness": bfs_value,
                }
            )
    return rows


def _timed(fn) -> float:
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start
