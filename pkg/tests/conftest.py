import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from coverfrac import CoverSystem, erdos_example  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def B():
    return erdos_example()


def system(*pairs):
    return CoverSystem.from_pairs(pairs)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
