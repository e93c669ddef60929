"""Structure and knobs of the built-in verification suite."""

import json

from superlum import run_suite, suite_report


def test_suite_passes_and_reports_are_json_clean():
    reports = run_suite(seed=0)
    assert all(r.passed for r in reports)
    payload = suite_report(reports, seed=0)
    assert payload["all_passed"] is True
    json.dumps(payload)  # numpy scalars must not leak through
    names = [c["name"] for c in payload["checks"]]
    assert len(names) == len(set(names))


def test_tolerance_override_reaches_pass_checks():
    reports = run_suite(seed=0, tolerance=1e-20)
    tightened = [r for r in reports if r.tol == 1e-20]
    assert tightened and any(not r.passed for r in tightened)


def test_sabotage_knobs_break_their_checks():
    broken = {r.name: r for r in run_suite(seed=0, break_antisymmetric_term=True)}
    assert not broken["superluminal_inverse_law"].passed
    perturbed = {r.name: r for r in run_suite(seed=0, perturb_cauchy=0.1)}
    assert not perturbed["cauchy_condition"].passed
