import pytest

ACCEPTANCE = "test_acceptance.py::test_criterion_"
_results = {}


def pytest_runtest_logreport(report):
    if ACCEPTANCE not in report.nodeid:
        return
    if report.when == "call" or report.outcome != "passed":
        name = report.nodeid.split("::")[-1][len("test_criterion_"):]
        _results[name] = (report.outcome, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_results):
        outcome, duration = _results[name]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        number, _, label = name.partition("_")
        terminalreporter.write_line(f"criterion {int(number):2d} {verdict}  {label.replace('_', ' ')}  ({duration:.2f} s)")
