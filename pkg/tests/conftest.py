import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE: list[str] = []


@pytest.fixture
def record():
    """Record one acceptance line: record(criterion, passed, detail)."""

    def _record(criterion, passed, detail=""):
        _ACCEPTANCE.append(f"[{'PASS' if passed else 'FAIL'}] {criterion}: {detail}")

    return _record


@pytest.fixture(scope="session")
def q7():
    from hypercist import q7_family

    return q7_family()


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
