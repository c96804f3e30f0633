import pytest

_acceptance_results: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "acceptance(cid, title): tags a test as one acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    cid, title = marker.args
    if report.when == "call":
        _acceptance_results[cid] = (title, "PASS" if report.passed else "FAIL")
    elif report.failed:  # setup/teardown error
        _acceptance_results[cid] = (title, "FAIL")
    elif report.skipped:
        _acceptance_results[cid] = (title, "SKIP")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_acceptance_results, key=lambda c: int(c)):
        title, verdict = _acceptance_results[cid]
        terminalreporter.write_line(f"criterion {cid:>2}: {verdict}  {title}")
