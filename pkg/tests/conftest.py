import os

import pytest
from hypothesis import HealthCheck, settings

from mtkit.fixtures import fixture_languages, fixture_suite

settings.register_profile(
    "default", max_examples=200, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call" and not rep.failed:
        return
    n, title = mark.args
    ok = rep.passed if rep.when == "call" else False
    prev = _CRITERIA.get(n, (title, True))
    _CRITERIA[n] = (title, prev[1] and ok)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        title, ok = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}")


@pytest.fixture(scope="session")
def fx():
    return fixture_suite()


@pytest.fixture(scope="session")
def langs():
    return fixture_languages()


@pytest.fixture(scope="session")
def manifest(fx):
    return fx.manifest()
