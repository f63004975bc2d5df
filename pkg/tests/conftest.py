import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

_CRITERIA: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[-1]
        doc = dict(report.user_properties).get("criterion", name)
        _CRITERIA[name] = (doc, "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA):
        doc, verdict = _CRITERIA[name]
        terminalreporter.write_line(f"{verdict}  {doc}")
