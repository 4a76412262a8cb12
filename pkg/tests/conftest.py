import pytest

from augms.index import IndexBuilder

ABRA = b"abracadabra$"


@pytest.fixture(scope="session")
def abra_builder():
    return IndexBuilder(ABRA)


@pytest.fixture(scope="session")
def abra(abra_builder):
    return abra_builder.build("full")


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance():
    """Record one pass/fail line for an acceptance criterion."""
    def record(name: str, ok: bool, detail: str = "") -> bool:
        line = f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
