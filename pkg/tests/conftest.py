import pytest

_REPORT = []


@pytest.fixture
def report():
    """Record a one-line verdict; lines are printed at the end of the run."""

    def _record(number, passed, detail=""):
        line = f"criterion {number:2d}: {'PASS' if passed else 'FAIL'}  {detail}".rstrip()
        _REPORT.append((number, line))
        print(line)
        return passed

    return _record


def pytest_terminal_summary(terminalreporter):
    if not _REPORT:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_REPORT):
        terminalreporter.write_line(line)
