import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

_criteria = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion[" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        k = int(report.nodeid.split("[criterion")[1].rstrip("]"))
        _criteria[k] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    from test_acceptance import TITLES

    terminalreporter.section("acceptance criteria")
    for k in sorted(_criteria):
        verdict = "PASS" if _criteria[k] == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {k:2d}: {verdict}  {TITLES[k]}")
