import json

import pytest

from graphvuln import decode_graph6, kernels
from graphvuln.harness import (
    ALL_CHECKS,
    CorpusConfig,
    GraphFacts,
    fastpath_benchmark,
    iter_corpus,
    run_graph_check,
    run_suite,
)

SMALL = CorpusConfig(max_n=4, trees_max_n=5, random_count=8, pendant_total_max=6)


@pytest.fixture(scope="module")
def small_report():
    return run_suite(SMALL)


def test_small_corpus_all_green(small_report):
    assert small_report.total_failures == 0
    assert {c.check_id for c in small_report.checks} == set(ALL_CHECKS)


def test_report_bookkeeping_invariants(small_report):
    for c in small_report.checks:
        assert c.graphs_tested == c.passes + c.failures
        assert (c.failures == 0) == (not c.counterexamples)
        if c.check_id in ("thm2_7", "thm2_8", "c3_4") and c.graphs_tested:
            assert c.worst_slack is not None and c.worst_slack >= 0


def test_equality_witnesses_present(small_report):
    c34 = small_report.check("c3_4")
    labels = set(c34.equality_examples)
    assert {"petersen", "pentagon", "C6"} <= labels


def test_json_round_trip_and_types(small_report):
    doc = json.loads(small_report.to_json())
    assert doc["passed"] is True and doc["failures_total"] == 0
    assert doc["corpus"]["graphs"] == small_report.corpus_size
    for check in doc["checks"]:
        assert isinstance(check["graphs_tested"], int)
        assert isinstance(check["equality_hits"], int)


def test_determinism_byte_identical():
    cfg = CorpusConfig(max_n=3, trees_max_n=4, random_count=5, pendant_total_max=4)
    assert run_suite(cfg).to_json() == run_suite(cfg).to_json()


def test_digest_tracks_corpus():
    a = run_suite(CorpusConfig(max_n=3, trees_max_n=0, random_count=0, checks=("rm2_identity",)))
    b = run_suite(CorpusConfig(max_n=4, trees_max_n=0, random_count=0, checks=("rm2_identity",)))
    c = run_suite(CorpusConfig(max_n=3, trees_max_n=0, random_count=0, checks=("rm2_identity",)))
    assert a.corpus_digest != b.corpus_digest
    assert a.corpus_digest == c.corpus_digest


def test_check_filter():
    rep = run_suite(CorpusConfig(max_n=3, trees_max_n=0, random_count=0, checks=("thm2_6",)))
    assert [c.check_id for c in rep.checks] == ["thm2_6"]
    assert rep.total_failures == 0


def test_unknown_check_rejected():
    with pytest.raises(ValueError, match="unknown checks"):
        run_suite(CorpusConfig(checks=("thm9_9",)))


def test_counterexamples_replay():
    # a negative tolerance makes every float equality impossible, forcing failures
    cfg = CorpusConfig(
        max_n=3, trees_max_n=0, random_count=0, include_named=False,
        checks=("t3_2",), tolerance=-1.0,
    )
    rep = run_suite(cfg)
    check = rep.check("t3_2")
    assert check.failures > 0 and check.counterexamples
    assert len(check.counterexamples) <= 10
    for ce in check.counterexamples:
        g = decode_graph6(ce["graph6"])
        outcome = run_graph_check("t3_2", g, cfg)
        assert not outcome.ok


def test_run_graph_check_direct():
    from graphvuln import cycle_graph, pendant_tree

    assert run_graph_check("thm2_8", cycle_graph(7)).ok
    assert run_graph_check("thm2_5", pendant_tree([2, 1])).ok
    with pytest.raises(ValueError, match="not a graph-wise check"):
        run_graph_check("gc_path", cycle_graph(7))
    with pytest.raises(ValueError, match="not applicable"):
        run_graph_check("thm2_5", cycle_graph(7))  # not a tree


def test_corpus_iteration_is_deterministic():
    items1 = [(s, l) for s, l, _ in iter_corpus(SMALL)]
    items2 = [(s, l) for s, l, _ in iter_corpus(SMALL)]
    assert items1 == items2
    assert items1[0][0] == "exhaustive"


def test_graph_facts_caching():
    from graphvuln import petersen_graph

    facts = GraphFacts(petersen_graph(), "petersen")
    assert facts.m1 == 90 and facts.m2 == 135 and facts.rm2 == 60
    assert facts.gc(0.5) == 30.0 and facts.closeness == 30.0
    assert facts.flags.is_moore_diam2 and facts.girth == 5


class TestFastpathBenchmark:
    def test_pendant_family_rows(self):
        rows = fastpath_benchmark("tnd", [50, 200], repetitions=1)
        assert len(rows) == 2
        for row in rows:
            assert row["values_equal"] is True
            assert row["bfs_time"] > 0 and row["formula_time"] > 0

    def test_star_and_complete(self):
        for family in ("star", "complete"):
            (row,) = fastpath_benchmark(family, [64], repetitions=1)
            assert row["values_equal"] is True

    def test_short_path_allowed_long_path_rejected(self):
        (row,) = fastpath_benchmark("path", [5], repetitions=1)
        assert row["values_equal"] is True
        with pytest.raises(ValueError, match="diameter"):
            fastpath_benchmark("path", [50], repetitions=1)

    def test_unknown_family(self):
        with pytest.raises(ValueError, match="family"):
            fastpath_benchmark("hypercube", [8], repetitions=1)

    def test_compares_both_backends(self):
        backends = tuple(sorted(kernels.available_backends()))
        rows = fastpath_benchmark("tnd", [64], repetitions=1, backends=backends)
        assert [r["backend"] for r in rows] == list(backends)
        values = {r["closeness"] for r in rows}
        assert len(values) == 1  # backend cannot change the number
