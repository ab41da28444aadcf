from pathlib import Path

import pytest

GOLDEN = Path(__file__).parent / "golden"

# The largest 5-core 5'-partition, drawn on the 5-abacus with bead multiplicities 4 6 8 11.
FIG1_PARTS = (26, 22, 18, 14, 14, 11, 11, 8, 8, 8, 6, 6, 6, 4, 4, 4, 4, 3, 3, 3, 3, 2, 2, 2, 2, 1, 1, 1, 1)

PRIMES_TO_43 = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43)

ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
