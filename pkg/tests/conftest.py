import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_acceptance: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and (report.when == "call" or report.failed):
        name = report.nodeid.split("::")[-1]
        _acceptance.append((name, "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{outcome}  {name}")
