import pytest

_CRITERIA: dict[int, str] = {}


@pytest.fixture
def record_criterion():
    def record(number: int, passed: bool, note: str = "") -> None:
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'}" + (f"  ({note})" if note else "")
        _CRITERIA[number] = line
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for number in sorted(_CRITERIA):
            terminalreporter.write_line(_CRITERIA[number])
