"""Shared test configuration: acceptance-criteria result reporting."""

import re

_ACCEPTANCE_PATTERN = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")


def pytest_runtest_logreport(report):
    """Print one PASS/FAIL line per acceptance criterion as it completes."""
    if report.when != "call":
        return
    match = _ACCEPTANCE_PATTERN.search(report.nodeid)
    if match:
        outcome = "PASS" if report.passed else "FAIL"
        print(f"\nACCEPTANCE criterion {match.group(1)}: {outcome}")
