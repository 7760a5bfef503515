"""Extremal search: determinism, seeded-family floor, exhaustive oracles."""

from dataclasses import asdict

import pytest

from ngbounds.graphs import enumerate_labeled, family, parse_graph6
from ngbounds.scan import run_scan
from ngbounds.search import (SearchConfig, best_complete_split,
                             make_objective, optimize)
from ngbounds.spectral import exact_inertia


def exhaustive_max(n: int, objective_id: str) -> float:
    report = run_scan(enumerate_labeled(n), ids=["STANLEY"],
                      track_objectives=(objective_id,))
    return report.objective_maxima[objective_id].value


def test_make_objective_parsing():
    assert make_objective("MU_NG_SUM").id == "MU_NG_SUM"
    violation = make_objective("VIOLATION:CONJ5_CONF")
    assert violation.bound_id == "CONJ5_CONF"
    with pytest.raises(Exception):
        make_objective("VIOLATION:NOPE")
    with pytest.raises(ValueError):
        make_objective("WHATEVER")


def test_best_complete_split_n5():
    alpha, value = best_complete_split(make_objective("MU_NG_SUM"), 5)
    assert alpha == 3
    assert abs(value - 5.0) <= 1e-8
    alpha_s, value_s = best_complete_split(make_objective("SQRT_SPLUS_NG_SUM"), 5)
    assert alpha_s == 3
    assert abs(value_s - 5.0) <= 1e-8


def test_best_complete_split_n8_hits_ceiling():
    # n = 8 = 2 (mod 3): the conjectured ceiling 4n/3 - 5/3 is exactly 9
    alpha, value = best_complete_split(make_objective("MU_NG_SUM"), 8)
    assert abs(value - 9.0) <= 1e-8
    assert alpha == 5          # ties break toward smaller alpha


def test_complete_split_single_positive_eigenvalue():
    for n in (5, 8, 12):
        for alpha in range(1, n):
            g = family("complete_split", n, alpha)
            assert exact_inertia(g)[0] == 1
            gbar = g.complement()
            assert exact_inertia(gbar)[0] == (1 if alpha >= 2 else 0)
            # consequence: the two Nordhaus-Gaddum objectives coincide here
            mu = make_objective("MU_NG_SUM").evaluate(g)
            sq = make_objective("SQRT_SPLUS_NG_SUM").evaluate(g)
            assert abs(mu - sq) <= 1e-9


def test_optimize_replay_determinism():
    cfg = SearchConfig(n=6, seed=11, restarts=4, steps=80)
    a = optimize("MU_NG_SUM", cfg)
    b = optimize("MU_NG_SUM", cfg)
    assert asdict(a) == asdict(b)


def test_optimize_jobs_deterministic():
    cfg = SearchConfig(n=6, seed=3, restarts=4, steps=80)
    a = optimize("MU_NG_SUM", cfg, jobs=1)
    b = optimize("MU_NG_SUM", cfg, jobs=4)
    assert asdict(a) == asdict(b)


def test_optimize_replay_value_matches_graph():
    cfg = SearchConfig(n=6, seed=5, restarts=4, steps=80)
    res = optimize("SQRT_SPLUS_NG_SUM", cfg)
    g = parse_graph6(res.best_g6)
    assert abs(make_objective("SQRT_SPLUS_NG_SUM").evaluate(g) - res.best_value) == 0.0


def test_optimize_reaches_exhaustive_max_n5():
    target = exhaustive_max(5, "MU_NG_SUM")
    assert abs(target - 5.0) <= 1e-8
    cfg = SearchConfig(n=5, seed=0, restarts=6, steps=100)
    res = optimize("MU_NG_SUM", cfg)
    assert res.best_value >= target - 1e-8


def test_optimize_at_least_best_seeded_start():
    cfg = SearchConfig(n=12, seed=2, restarts=4, steps=40)
    res = optimize("MU_NG_SUM", cfg)
    _, seeded = best_complete_split(make_objective("MU_NG_SUM"), 12)
    assert res.best_value >= seeded - 1e-10


def test_optimize_trace_strictly_increasing_per_restart():
    cfg = SearchConfig(n=6, seed=9, restarts=3, steps=60)
    res = optimize("MU_NG_SUM", cfg)
    by_restart = {}
    for restart, step, value, g6 in res.trace:
        by_restart.setdefault(restart, []).append(value)
    for values in by_restart.values():
        assert all(b > a + 1e-10 for a, b in zip(values, values[1:]))


def test_violation_search_no_counterexample_n9():
    cfg = SearchConfig(n=9, seed=1, restarts=4, steps=60)
    res = optimize("VIOLATION:CONJ5_CONF", cfg)
    assert res.best_value <= 1e-8


def test_search_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(n=3)
    with pytest.raises(ValueError):
        SearchConfig(n=6, restarts=0)
    with pytest.raises(ValueError):
        SearchConfig(n=6, neighborhoods=("teleport",))
