import pytest

from kosnet.ingest import build_catalog
from kosnet.kos import build_kos
from kosnet.triples import read_triples

from helpers import F1

_acceptance_results = {}


@pytest.fixture(scope="session")
def f1_paths():
    return {"data": F1 / "data.nt", "kos": F1 / "kos.nt", "kos_nosyn": F1 / "kos_nosyn.nt"}


@pytest.fixture(scope="session")
def f1_catalog(f1_paths):
    return build_catalog(read_triples(f1_paths["data"]))


@pytest.fixture(scope="session")
def f1_kos(f1_paths):
    return build_kos(read_triples(f1_paths["kos"]))


@pytest.fixture(scope="session")
def f1_kos_nosyn(f1_paths):
    return build_kos(read_triples(f1_paths["kos_nosyn"]))


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion of the build")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    report = outcome.get_result()
    number, title = marker.args
    if report.when == "call" or report.failed:
        previous = _acceptance_results.get(number, (title, True))[1]
        _acceptance_results[number] = (title, previous and report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance_results):
        title, ok = _acceptance_results[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {number}: {title}")
