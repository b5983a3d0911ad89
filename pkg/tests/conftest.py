import pytest

from cyclicconv.dcc import dcc_build
from cyclicconv.gf import field_build

_acceptance = {}
_labels = {}


def blocks(text):
    """'4031 1130' -> [(4, 0, 3, 1), (1, 1, 3, 0)]"""
    return [tuple(int(ch) for ch in b) for b in text.split()]


@pytest.fixture(scope="session")
def gf5():
    return field_build(5)


@pytest.fixture(scope="session")
def gf7():
    return field_build(7)


@pytest.fixture(scope="session")
def code5(gf5):
    """The GF(5), alpha = 2, k = 1, m = 2 reference code."""
    return dcc_build(gf5, 1, 2)


@pytest.fixture(scope="session")
def code7(gf7):
    return dcc_build(gf7, 2, 2)


def pytest_runtest_logreport(report):
    marker = report.keywords.get("acceptance")
    if marker is None or report.when not in ("setup", "call"):
        return
    item_id = report.nodeid
    if report.when == "setup" and report.passed:
        return
    _acceptance[item_id] = report.passed


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("acceptance")
        if mark is not None:
            item.user_properties.append(("criterion", mark.args[0]))
            _labels[item.nodeid] = mark.args[0]



def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for node, ok in _acceptance.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {_labels.get(node, node)}")
