import pytest

# filled by tests/test_acceptance.py: criterion number -> summary line
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])


@pytest.fixture
def report():
    """Record and print one PASS/FAIL line for a criterion, then assert it."""

    def _report(n: int, title: str, ok: bool, detail: str = "") -> None:
        line = f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title}" + (f"  [{detail}]" if detail else "")
        ACCEPTANCE_LINES[n] = line
        print(line)
        assert ok, line

    return _report
