import math

import pytest

from leolte.orbit import OrbitScenario


@pytest.fixture
def ref():
    """1200 km, 14 GHz, 45 deg mask."""
    return OrbitScenario()


@pytest.fixture
def ref11():
    return OrbitScenario(carrier_hz=11e9)


def deg(x):
    return math.radians(x)


_criteria = {}


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n = mark.args[0]
    doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
    failed = call.excinfo is not None
    prev = _criteria.get(n, (doc, False))
    _criteria[n] = (doc, prev[1] or failed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        doc, failed = _criteria[n]
        terminalreporter.write_line(f"criterion {n:>2}  {'FAIL' if failed else 'PASS'}  {doc}")
