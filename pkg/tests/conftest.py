from fractions import Fraction

import pytest
from hypothesis import strategies as st

from cubicgalois.poly import Poly


def rationals(max_num=10**6, max_den=10**6, positive=False):
    lo = 1 if positive else -max_num
    return st.builds(Fraction, st.integers(lo, max_num), st.integers(1, max_den))


def small_polys(max_degree=4, bound=9):
    coeff = st.builds(Fraction, st.integers(-bound, bound), st.integers(1, 4))
    return st.lists(coeff, min_size=1, max_size=max_degree + 1).map(Poly)


@pytest.fixture
def p0():
    return Poly.from_descending([1, 0, -3, 1])


# ------------------------------------------------ acceptance criterion report

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    info = _criteria.get(report.nodeid)
    if info is not None:
        info["outcome"] = "PASS" if report.passed else "FAIL"


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _criteria[item.nodeid] = {"n": m.args[0], "title": m.args[1], "outcome": "NOT RUN"}


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for info in sorted(_criteria.values(), key=lambda i: i["n"]):
        terminalreporter.write_line(f"criterion {info['n']:>2}: {info['outcome']:<7} {info['title']}")
