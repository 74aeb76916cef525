import re
from collections import defaultdict

_criteria: dict[int, list[tuple[str, str]]] = defaultdict(list)
_NAME = re.compile(r"test_acceptance\.py::test_c(\d+)_(\w+)")


def pytest_runtest_logreport(report):
    m = _NAME.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria[int(m.group(1))].append((m.group(2), report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        parts = _criteria[number]
        status = "PASS" if all(o == "passed" for _, o in parts) else "FAIL"
        failed = [name for name, o in parts if o != "passed"]
        note = f"  (failing: {', '.join(failed)})" if failed else ""
        terminalreporter.write_line(f"criterion {number:2d}: {status}{note}")
