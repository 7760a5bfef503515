"""Sweep driver: aggregates, worker-count independence, exit semantics."""

import pytest

import ngbounds.bounds as bounds_mod
from ngbounds.bounds import BoundSpec, Side, CONJECTURE, THEOREM
from ngbounds.graphs import Graph, enumerate_labeled, family, stream_from_graphs
from ngbounds.scan import (EXIT_CLEAN, EXIT_CONJECTURE_VIOLATED,
                           EXIT_THEOREM_VIOLATED, run_scan,
                           subgraph_monotonicity_scan)


def test_scan_labeled_n4_clean():
    report = run_scan(enumerate_labeled(4), certify=True)
    assert report.graphs == 64
    assert report.total_violations == 0
    assert report.exit_status == EXIT_CLEAN
    assert report.trace_max_residual <= 1e-8 * 16
    for agg in report.aggregates.values():
        assert agg.evaluated + agg.skipped == 64
    assert report.certify.mismatches == []


def test_scan_jobs_independent():
    a = run_scan(enumerate_labeled(5), jobs=1, certify=True,
                 track_objectives=("MU_NG_SUM",))
    b = run_scan(enumerate_labeled(5), jobs=4, certify=True,
                 track_objectives=("MU_NG_SUM",))
    assert a.graphs == b.graphs == 1024
    for bid in a.bounds:
        assert a.aggregates[bid] == b.aggregates[bid]
    assert a.objective_maxima["MU_NG_SUM"] == b.objective_maxima["MU_NG_SUM"]
    assert a.certify.mismatches == b.certify.mismatches
    assert a.certify.checked == b.certify.checked


def test_scan_objective_maximum_n5():
    report = run_scan(enumerate_labeled(5), ids=["STANLEY"],
                      track_objectives=("MU_NG_SUM", "SQRT_SPLUS_NG_SUM"))
    assert abs(report.objective_maxima["MU_NG_SUM"].value - 5.0) <= 1e-8
    assert abs(report.objective_maxima["SQRT_SPLUS_NG_SUM"].value - 5.0) <= 1e-8


def test_scan_min_slack_argmin_conj2_n5():
    # equality case: the graph or its complement is a complete split graph
    report = run_scan(enumerate_labeled(5), ids=["CONJ2_F1"])
    agg = report.aggregates["CONJ2_F1"]
    assert agg.min_slack <= 1e-8
    assert agg.min_slack >= -1e-8
    from ngbounds.graphs import classify_structure, parse_graph6
    g = parse_graph6(agg.argmin_g6)
    split_either = ("complete_split" in classify_structure(g)
                    or "complete_split" in classify_structure(g.complement()))
    assert split_either


def _fake_bound(bound_id: str, status: str) -> BoundSpec:
    # impossible floor: s+ >= n^3 fails on every graph with edges
    return BoundSpec(
        bound_id, status, "synthetic: s+ >= n^3",
        quantity=lambda g, c: g.s_plus,
        sides=(Side("lower", lambda g, c: float(g.n) ** 3),),
        applies=lambda inv: None if inv.m >= 1 else "no edges")


@pytest.fixture
def synthetic_bound():
    """Temporarily register a synthetic always-violated catalog entry."""
    registered = []

    def register(bound_id, status):
        spec = _fake_bound(bound_id, status)
        bounds_mod.CATALOG[bound_id] = spec
        bounds_mod.ALL_BOUND_IDS = bounds_mod.ALL_BOUND_IDS + (bound_id,)
        registered.append(bound_id)
        return spec

    yield register
    for bound_id in registered:
        del bounds_mod.CATALOG[bound_id]
    bounds_mod.ALL_BOUND_IDS = tuple(
        b for b in bounds_mod.ALL_BOUND_IDS if b not in registered)


def test_conjecture_violation_exit_code(synthetic_bound):
    synthetic_bound("FAKE_CONJ", CONJECTURE)
    report = run_scan(stream_from_graphs([family("complete", 4)]),
                      ids=["FAKE_CONJ"], reverify=False)
    assert report.total_violations == 1
    assert report.violations and report.violations[0].bound == "FAKE_CONJ"
    assert report.exit_status == EXIT_CONJECTURE_VIOLATED


def test_theorem_violation_exit_code(synthetic_bound):
    synthetic_bound("FAKE_THM", THEOREM)
    report = run_scan(stream_from_graphs([family("complete", 4)]),
                      ids=["FAKE_THM"], reverify=False)
    assert report.exit_status == EXIT_THEOREM_VIOLATED


def test_highprec_reverify_confirms_real_violation(synthetic_bound):
    # the high-precision recheck must keep a genuine violation
    synthetic_bound("FAKE_CONJ2", CONJECTURE)
    report = run_scan(stream_from_graphs([family("complete", 4)]),
                      ids=["FAKE_CONJ2"], reverify=True)
    assert report.total_violations == 1


def test_violation_listing_matches_exit_invariant():
    report = run_scan(enumerate_labeled(4))
    assert (len(report.violations) > 0) == (report.exit_status != EXIT_CLEAN)


# --- subgraph scan -------------------------------------------------------------

def test_subgraph_scan_k4_no_pairs():
    report = subgraph_monotonicity_scan(
        stream_from_graphs([family("complete", 4)]), "edge")
    assert report.graphs == 1
    assert report.comparisons == 6
    assert report.pairs == []


def test_subgraph_scan_n5_exhaustive_no_pairs():
    report = subgraph_monotonicity_scan(enumerate_labeled(5), "edge", jobs=2)
    assert report.graphs == 1024
    assert report.pairs == []


def test_subgraph_scan_full_mode_counts():
    g = family("cycle", 4)
    report = subgraph_monotonicity_scan(stream_from_graphs([g]), "full")
    assert report.comparisons == 4 + 4      # edges + vertices
    assert report.pairs == []


def test_subgraph_scan_rejects_unknown_mode():
    with pytest.raises(ValueError):
        subgraph_monotonicity_scan(enumerate_labeled(3), "induced")


def test_family_list_stream_conference_equalities():
    stream = stream_from_graphs([family("paley", p) for p in (5, 13, 17, 29)],
                                label="paley family list")
    report = run_scan(stream, ids=["CONJ5_CONF"])
    agg = report.aggregates["CONJ5_CONF"]
    assert agg.evaluated == 4
    assert agg.equalities == 4
    assert abs(agg.min_slack) <= 1e-8
