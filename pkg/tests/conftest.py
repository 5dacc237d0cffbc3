"""Acceptance reporting: tests marked ``criterion`` get one PASS/FAIL line
each in the terminal summary."""

import pytest

_results: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(cid, text): acceptance criterion")


def pytest_runtest_logreport(report):
    item_marks = getattr(report, "criterion", None)
    if item_marks is None:
        return
    cid, text = item_marks
    prev = _results.get(cid, (text, "PASS"))[1]
    failed = report.failed or prev == "FAIL"
    if report.when == "call" or report.failed:
        _results[cid] = (text, "FAIL" if failed else "PASS")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        rep.criterion = tuple(mark.args)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_results, key=lambda c: (len(c), c)):
        text, status = _results[cid]
        terminalreporter.write_line(f"{status}  {cid}  {text}")
