from __future__ import annotations

import json

import pytest

from edgereg import homology, invariants, suites
from edgereg.graphs import (disjoint_edges, emit_graph6, enumerate_graphs,
                            parse_graph6, star)
from edgereg.reports import MAX_STORED_VIOLATIONS, SuiteReport
from edgereg.suites import (CONJECTURE_SUITES, THEOREM_SUITES, SuiteSpec, run,
                            run_suite)


@pytest.fixture(autouse=True)
def _fresh_caches():
    yield
    suites.clear_all_caches()


def test_spec_validation():
    with pytest.raises(ValueError):
        SuiteSpec("no-such-suite")
    with pytest.raises(ValueError):
        SuiteSpec("lower-bound", s_max=4)
    with pytest.raises(ValueError):
        SuiteSpec("lower-bound", n_max=9)
    with pytest.raises(ValueError):
        SuiteSpec("lower-bound", characteristic=6)


def test_all_theorem_suites_pass_small():
    reports, code = run([SuiteSpec(name, n_max=4, s_max=2) for name in THEOREM_SUITES])
    assert code == 0
    assert all(r.passed for r in reports)
    assert all(r.graphs_tested == 18 for r in reports)


def test_lower_bound_tight_on_two_disjoint_edges():
    report = run_suite(SuiteSpec("lower-bound", graphs=(disjoint_edges(2),), s_max=1))
    assert report.passed
    # the bound is tight there: reg I = 3 = 2 + nu - 1
    assert homology.regularity_of_power(disjoint_edges(2), 1) == 3
    assert invariants.induced_matching_number(disjoint_edges(2)) == 2


def test_cameron_walker_star_square():
    assert homology.regularity_of_power(star(3), 2) == 4


def test_explicit_graph_list_and_file(tmp_path):
    lines = [emit_graph6(g) for g in enumerate_graphs(4)]
    path = tmp_path / "four.g6"
    path.write_text("\n".join(lines) + "\n")
    by_file = run_suite(SuiteSpec("matching-bound", graphs_file=str(path)))
    by_list = run_suite(SuiteSpec("matching-bound", graphs=tuple(enumerate_graphs(4))))
    assert by_file.graphs_tested == by_list.graphs_tested == 11
    assert by_file.passed and by_list.passed


def test_empty_run():
    reports, code = run([])
    assert reports == [] and code == 0


def test_parallel_jobs_match_serial():
    serial = run_suite(SuiteSpec("lower-bound", n_max=4, s_max=2, jobs=1))
    parallel = run_suite(SuiteSpec("lower-bound", n_max=4, s_max=2, jobs=2))
    assert serial.graphs_tested == parallel.graphs_tested
    assert serial.violations == parallel.violations


def test_report_merge_is_associative_and_commutative():
    def rep(count, viols):
        r = SuiteReport("lower-bound", graphs_tested=count)
        for k in range(viols):
            r.add_violation(f"g{k}", 1, k, k + 1, "ctx")
        return r

    a, b, c = rep(1, 2), rep(2, 0), rep(3, 1)
    left = a.merge(b).merge(c)
    right = a.merge(b.merge(c))
    assert left.to_json_dict() == right.to_json_dict()
    ab, ba = a.merge(b), b.merge(a)
    assert ab.violations_total == ba.violations_total
    assert ab.graphs_tested == ba.graphs_tested


def test_violation_storage_is_capped():
    r = SuiteReport("lower-bound")
    for k in range(MAX_STORED_VIOLATIONS + 20):
        r.add_violation("g", 1, k, k, "ctx")
    assert len(r.violations) == MAX_STORED_VIOLATIONS
    assert r.violations_total == MAX_STORED_VIOLATIONS + 20
    assert not r.passed


# mutation sensitivity ---------------------------------------------------------

def test_mutated_induced_matching_is_caught(monkeypatch):
    suites.clear_all_caches()
    true_nu = invariants.induced_matching_number

    def off_by_one(g):
        return true_nu(g) + 1

    monkeypatch.setattr(invariants, "induced_matching_number", off_by_one)
    report = run_suite(SuiteSpec("lower-bound", n_max=4, s_max=1))
    assert not report.passed
    # the dumped counterexample replays deterministically
    bad = parse_graph6(report.violations[0]["graph6"])
    replay = run_suite(SuiteSpec("lower-bound", graphs=(bad,), s_max=1))
    assert not replay.passed
    assert replay.violations[0]["graph6"] == report.violations[0]["graph6"]


def test_mutated_homology_rank_is_caught(monkeypatch):
    suites.clear_all_caches()
    true_rank = homology.rank_gf2

    def deflated(rows):
        return max(0, true_rank(rows) - 1)

    monkeypatch.setattr(homology, "rank_gf2", deflated)
    failed = []
    for name in ("matching-bound", "lower-bound"):
        report = run_suite(SuiteSpec(name, n_max=4, s_max=1))
        failed.append(not report.passed)
        suites.clear_all_caches()
    assert any(failed)


def test_clean_rerun_after_mutations():
    report = run_suite(SuiteSpec("lower-bound", n_max=4, s_max=1))
    assert report.passed


# conjecture suites --------------------------------------------------------------

def test_conjecture_suites_are_labeled_and_pass_small():
    for name in CONJECTURE_SUITES:
        report = run_suite(SuiteSpec(name, n_max=4, s_max=2))
        assert report.conjecture
        assert report.passed  # no counterexample at this scale


def test_conjecture_failures_do_not_affect_exit_code(monkeypatch):
    def always_violates(g, spec):
        return [{"graph6": emit_graph6(g), "s": 1, "lhs": 0, "rhs": 0, "context": "x"}]

    monkeypatch.setitem(suites._CHECKERS, "conjecture-a", always_violates)
    reports, code = run([SuiteSpec("conjecture-a", n_max=3, s_max=1)])
    assert not reports[0].passed
    assert code == 0


# disk cache ----------------------------------------------------------------------

def test_disk_cache_roundtrip(tmp_path, monkeypatch):
    monkeypatch.setenv(suites.CACHE_ENV_VAR, str(tmp_path))
    suites.clear_all_caches()
    run([SuiteSpec("matching-bound", n_max=3, s_max=1)])
    path = tmp_path / suites.CACHE_FILE
    assert path.exists()
    payload = json.loads(path.read_text())
    assert payload  # regularities were recorded
    suites.clear_all_caches()
    reports, code = run([SuiteSpec("matching-bound", n_max=3, s_max=1)])
    assert code == 0 and reports[0].passed


def test_corrupt_disk_cache_is_ignored(tmp_path, monkeypatch):
    monkeypatch.setenv(suites.CACHE_ENV_VAR, str(tmp_path))
    (tmp_path / suites.CACHE_FILE).write_text("not json")
    reports, code = run([SuiteSpec("matching-bound", n_max=3, s_max=1)])
    assert code == 0
