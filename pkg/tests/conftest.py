import pytest

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or rep.failed:
        n, title = mark.args
        entry = _criteria.setdefault(n, {"title": title, "passed": 0, "failed": 0})
        entry["passed" if rep.passed else "failed"] += 1


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_criteria):
        e = _criteria[n]
        status = "PASS" if e["failed"] == 0 else "FAIL"
        runs = e["passed"] + e["failed"]
        tr.write_line(f"{status} criterion {n:2d}: {e['title']} ({e['passed']}/{runs} cases)")
