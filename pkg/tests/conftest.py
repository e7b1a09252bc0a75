import pytest

from gentrig.pqtrig import PqParams

GRID = (1.1, 1.5, 2.0, 2.5, 3.0, 5.0, 10.0)

# Lines recorded by the acceptance suite, echoed in the terminal summary.
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=[(2.5, 3.0), (1.5, 1.5), (2.0, 2.0), (1.1, 5.0), (10.0, 1.1)],
                ids=lambda t: f"p{t[0]}-q{t[1]}")
def pq(request):
    return PqParams(*request.param)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
