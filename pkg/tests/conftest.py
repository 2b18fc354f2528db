"""Prints a one-line pass/fail summary per acceptance criterion."""

import re

CRITERIA = {
    1: "8x8 golden tables",
    2: "5x10 table and footer reproduction",
    3: "worked decompositions",
    4: "2x3 table census",
    5: "identity suite",
    6: "errata confirmation and domain calibration",
    7: "known-sequence edges",
    8: "property suite",
}

_NODE_RE = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")
_outcomes: dict[int, bool] = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    match = _NODE_RE.search(report.nodeid)
    if not match:
        return
    number = int(match.group(1))
    passed = report.outcome == "passed"
    _outcomes[number] = _outcomes.get(number, True) and passed


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_outcomes):
        verdict = "PASS" if _outcomes[number] else "FAIL"
        label = CRITERIA.get(number, "")
        terminalreporter.write_line(f"criterion {number} ({label}): {verdict}")
