from __future__ import annotations

import pytest
from curvop_core import SUITES, OracleSummary, RangeError, run_suite


def test_summary_tally():
    summary = OracleSummary("demo", trials=3, seed=0)
    assert summary.to_dict()["worst_slack"] is None
    summary.record(True, 0.5, "fine")
    for i in range(7):
        summary.record(False, -float(i), f"bad {i}")
    assert summary.checks == 8
    assert summary.failures == 7
    assert not summary.passed
    assert summary.worst_slack == -6.0
    assert summary.first_failures == [f"bad {i}" for i in range(5)]


def test_lemma44_suite_is_exhaustive():
    summary = run_suite("lemma44", 1, 0)
    assert summary.passed
    # Σ over n = 8..64 of ⌊(n − 4)/2⌋ admissible p.
    assert summary.checks == sum((n - 4) // 2 for n in range(8, 65))
    assert summary.worst_slack > 0
    assert summary.details == {"n_min": 8, "n_max": 64}


def test_lemma32_suite():
    summary = run_suite("lemma32", 300, 5)
    assert summary.passed, summary.first_failures
    assert summary.details["near_trials"] == 3
    assert summary.details["two_level_detected"] == 3
    assert summary.details["near_equality_rejected"] == 3


@pytest.mark.parametrize(("suite", "trials"), [("lemma31", 60), ("kyfan", 30), ("concentration", 60)])
def test_random_suites_pass(suite, trials):
    summary = run_suite(suite, trials, 11)
    assert summary.passed, summary.first_failures
    assert summary.checks >= trials


def test_suites_are_reproducible():
    first = run_suite("lemma31", 20, 3).to_dict()
    second = run_suite("lemma31", 20, 3).to_dict()
    assert first == second


def test_rick_grid_suite():
    summary = run_suite("rick-grid", 1, 2, restarts=16)
    assert summary.passed, summary.first_failures
    assert summary.checks == 2
    assert summary.details["worst_gap"] <= summary.details["tolerance"]


def test_sandwich_suite():
    summary = run_suite("sandwich", 3, 4, restarts=16)
    # Trials cover n = 4, 5, 6 with three checks per k.
    assert summary.checks == 3 * (6 + 10 + 15)
    assert summary.passed, summary.first_failures


def test_cor34_soundness_suite():
    summary = run_suite("cor34-soundness", 200, 7, restarts=8)
    assert summary.passed, summary.first_failures
    assert summary.details["hypotheses_met"] > 0
    assert summary.checks == summary.details["hypotheses_met"]


def test_bad_arguments():
    assert "lemma32" in SUITES
    with pytest.raises(RangeError):
        run_suite("lemma32", 0, 0)
    with pytest.raises(RangeError, match="Unknown oracle suite"):
        run_suite("nope", 1, 0)
