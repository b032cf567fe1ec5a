import json
from pathlib import Path

import pytest

from mdtree.trees import tree_from_json

FIXTURES = Path(__file__).parent / "fixtures"

# Rows |T(n,0..n)| for n <= 5, counted by a throwaway script that walks every
# raw parent array on {0..n} (no Prufer codes) and rejects cyclic ones.
ORACLE_ROWS = {
    0: (1,),
    1: (1, 1),
    2: (4, 3, 2),
    3: (27, 19, 12, 6),
    4: (256, 175, 110, 60, 24),
    5: (3125, 2101, 1320, 750, 360, 120),
}


@pytest.fixture
def example_tree_path():
    return FIXTURES / "md_example_tree.json"


@pytest.fixture
def example_tree(example_tree_path):
    return tree_from_json(json.loads(example_tree_path.read_text()))


_ACCEPTANCE: dict[int, list] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not (report.when == "setup" and report.failed):
        return
    number, title = marker.args
    entry = _ACCEPTANCE.setdefault(number, [title, True])
    entry[1] = entry[1] and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, ok = _ACCEPTANCE[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:2d}. {title}")
