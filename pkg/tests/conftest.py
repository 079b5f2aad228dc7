import csv
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"

_acceptance: dict[str, str] = {}


def _read(name):
    with open(DATA / name, newline="") as fh:
        return list(csv.DictReader(fh))


@pytest.fixture(scope="session")
def published_table1():
    return [{k: (v if k == "family" else int(v)) for k, v in r.items()}
            for r in _read("table1_published.csv")]


@pytest.fixture(scope="session")
def published_table2():
    return [{k: int(v) for k, v in r.items()} for r in _read("table2_published.csv")]


@pytest.fixture
def criterion(request):
    """Record a PASS/FAIL line for an acceptance criterion."""
    name = request.node.get_closest_marker("criterion").args[0]
    yield
    failed = getattr(request.node, "rep_call", None)
    _acceptance[name] = "FAIL" if failed is None or failed.failed else "PASS"


@pytest.hookimpl(hookwrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        terminalreporter.write_line(f"{_acceptance[name]}  {name}")
