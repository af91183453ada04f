from fractions import Fraction

import pytest
from hypothesis import settings

from weylverma import build_embedding, build_root_datum

settings.register_profile("default", deadline=None, max_examples=40)
settings.load_profile("default")


def F(*xs):
    """Weight from rationals given as ints or strings."""
    return tuple(Fraction(x) for x in xs)


@pytest.fixture
def b2():
    return build_root_datum("B2")


@pytest.fixture
def b2_theta(b2):
    """B2 with a = A1 on alpha1 + 2 alpha2; its orthogonal partner sits on alpha1."""
    return build_embedding(b2, [[1, 2]])


# --- one summary line per acceptance criterion ---

_criteria: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when != "call" and not report.failed:
        return
    n, title = mark.args
    ok = report.passed if report.when == "call" else False
    prev = _criteria.get(n, (title, True))
    _criteria[n] = (title, prev[1] and ok)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        title, ok = _criteria[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}")
