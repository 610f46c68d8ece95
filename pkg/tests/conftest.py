"""Terminal summary: one pass/fail line per acceptance criterion."""

from __future__ import annotations

import pytest

CRITERIA = {
    "test_criterion_1_rank_axioms": "rank axioms hold on random matrices",
    "test_criterion_2_rank_nullity_and_modular_law": "rank-nullity and modular law",
    "test_criterion_3_regular_witnesses": "regular witnesses satisfy xyx = x",
    "test_criterion_4_box_hom_defects": "box actions: hom defect below disagreement",
    "test_criterion_5_injectivity_bound": "separated-set injectivity bound",
    "test_criterion_6_fixture_units_are_two_sided": "finite-group units invert on both sides",
    "test_criterion_7_chart_conversion": "exact cycles chart and convert losslessly",
    "test_criterion_8_stable_finiteness_2x2": "2x2 one-sided inverses are two-sided",
}

_results: dict = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and item.name in CRITERIA:
        _results[item.name] = (report.outcome, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for name, label in CRITERIA.items():
        if name not in _results:
            continue
        outcome, duration = _results[name]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        number = name.split("_")[2]
        terminalreporter.write_line(
            f"criterion {number}: {verdict} ({duration:.2f}s) - {label}"
        )
