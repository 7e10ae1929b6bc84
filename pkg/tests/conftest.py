import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from groupgraph.catalog import catalog_specs  # noqa: E402
from groupgraph.classify import GroupAnalysis  # noqa: E402
from groupgraph.groups import build_group  # noqa: E402


@pytest.fixture(scope="session")
def catalog100():
    """GroupAnalysis for every catalog group of order <= 100 (graphs built lazily, then shared)."""
    return [GroupAnalysis(build_group(s)) for s in catalog_specs(100)]


ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture
def record():
    """Record the one-line verdict of an acceptance criterion."""
    def _record(number: int, ok: bool, text: str) -> None:
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {text}"
        ACCEPTANCE_LINES[number] = line
        print(line)
    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[number])
