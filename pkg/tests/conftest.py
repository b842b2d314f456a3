from __future__ import annotations

import pytest

from conequot import classify, fixture_text, parse_input
from conequot.fixtures import FIXTURE_NAMES

# acceptance criterion results, printed as one line each in the summary
_CRITERIA: dict[int, tuple[str, str]] = {}


def record_criterion(number: int, description: str, status: str) -> None:
    _CRITERIA[number] = (description, status)


class criterion:
    """Context manager: records PASS/FAIL for an acceptance criterion."""

    def __init__(self, number: int, description: str):
        self.number = number
        self.description = description

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        status = "PASS" if exc_type is None else "FAIL"
        record_criterion(self.number, self.description, status)
        return False

    def note(self, extra: str) -> None:
        self.description += f" ({extra})"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        description, status = _CRITERIA[number]
        terminalreporter.write_line(
            f"criterion {number}: {status} - {description}"
        )


@pytest.fixture(scope="session")
def docs():
    return {name: parse_input(fixture_text(name)) for name in FIXTURE_NAMES}


@pytest.fixture(scope="session")
def results(docs):
    return {name: classify(doc.grading) for name, doc in docs.items()}
