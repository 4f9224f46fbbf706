"""Collects acceptance results so the run ends with one line per criterion."""

from __future__ import annotations

RESULTS: list[tuple[str, bool, str]] = []


def record(criterion: str, passed: bool, detail: str) -> None:
    """Called by test_acceptance.py once per criterion."""
    RESULTS.append((criterion, passed, detail))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in RESULTS:
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"{name}: {status}  [{detail}]")
