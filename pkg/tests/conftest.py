import pytest

from alcove_orbits.cartan import build_datum

ACCEPTANCE_LINES: list[str] = []

SMALL_TYPES = [("A", 1), ("A", 2), ("C", 2), ("G", 2), ("A", 3)]


@pytest.fixture
def datum():
    return build_datum


@pytest.fixture
def record():
    """Collect one summary line per acceptance criterion."""

    def _record(line: str) -> None:
        ACCEPTANCE_LINES.append(line)
        print(line)

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
