import sys


def pytest_terminal_summary(terminalreporter):
    acc = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if acc is None or not acc.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(acc.RESULTS):
        terminalreporter.write_line(acc.RESULTS[k])
