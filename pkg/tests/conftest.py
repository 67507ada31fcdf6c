import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from chromnsym.digraph import Digraph  # noqa: E402

ACCEPTANCE_RESULTS = []


@pytest.fixture
def c4_orientation():
    # v1->v2, v3->v1, v2->v4, v3->v4 with v_i = i-1
    return Digraph(4, [(0, 1), (2, 0), (1, 3), (2, 3)])


@pytest.fixture
def second_c4():
    # v1->v2, v1->v3, v2->v4, v4->v3
    return Digraph(4, [(0, 1), (0, 2), (1, 3), (3, 2)])


@pytest.fixture
def directed_p4():
    # v1->v2, v3->v2, v3->v4
    return Digraph(4, [(0, 1), (2, 1), (2, 3)])


def pytest_runtest_logreport(report):
    if report.when == "call" and "acceptance" in report.keywords:
        ACCEPTANCE_RESULTS.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: exit criterion for the build")
