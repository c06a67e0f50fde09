import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from domperf.graph_core import named_graph  # noqa: E402


@pytest.fixture
def rng():
    return random.Random(20240917)


@pytest.fixture
def c5():
    return named_graph("cycle", 5)


@pytest.fixture
def p6():
    return named_graph("path", 6)


@pytest.fixture
def k23():
    return named_graph("complete_bipartite", 2, 3)


_CRITERIA: dict[str, list[str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion this test checks")


def pytest_runtest_logreport(report):
    if report.when == "call" or report.failed:
        for label in getattr(report, "criteria", ()):
            _CRITERIA.setdefault(label, []).append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    outcome.get_result().criteria = [m.args[0] for m in item.iter_markers("criterion")]


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_CRITERIA):
        outcomes = _CRITERIA[label]
        status = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"{status}  {label}  ({len(outcomes)} checks)")
