import pytest

from giuga import default_cache

_criteria: dict[str, list[str]] = {}


@pytest.fixture(scope="session")
def cache():
    return default_cache()


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or report.outcome != "passed":
        _criteria.setdefault(crit, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_criteria, key=lambda c: (int(c.split(".")[0].rstrip("ab")), c)):
        outcomes = _criteria[crit]
        verdict = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {crit}: {verdict}")
