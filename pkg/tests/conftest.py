import pytest

_ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def record():
    """Log one acceptance criterion; the lines are echoed in the terminal summary."""

    def _record(criterion: str, passed: bool, detail: str = "") -> None:
        line = (criterion, bool(passed), detail)
        _ACCEPTANCE.append(line)
        print(f"{'PASS' if passed else 'FAIL'} {criterion} {detail}")

    return _record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, passed, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {criterion}  {detail}")
