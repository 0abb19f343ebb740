import pytest

from hopfkit.catalog import catalog_entries


@pytest.fixture(scope="session")
def catalog():
    return catalog_entries()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import CRITERIA, RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        status = RESULTS.get(n, "SKIPPED")
        terminalreporter.write_line(
            "criterion %d [%s]: %s" % (n, status, CRITERIA[n]))
