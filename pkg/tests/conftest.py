"""Shared pytest plumbing for the acceptance suite.

Criterion tests append one verdict line each; the hook replays them in the
terminal summary so the PASS/FAIL table is visible without -s.
"""

import pytest

_VERDICTS = []


@pytest.fixture(scope="session")
def verdicts():
    return _VERDICTS


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in _VERDICTS:
            terminalreporter.write_line(line)
