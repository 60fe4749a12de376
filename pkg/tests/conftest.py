import itertools
import math

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


def monotone_count(k: int, n: int) -> int:
    """Brute-force number of order-preserving maps [k] -> [n]."""
    return sum(1 for t in itertools.product(range(n + 1), repeat=k + 1) if list(t) == sorted(t))


def catalan(m: int) -> int:
    return math.comb(2 * m, m) // (m + 1)


@pytest.fixture
def square_decomposition():
    from sdot_lab.polygon import PolygonalDecomposition

    return PolygonalDecomposition(3, ((1, 3),))


# criterion number -> one-line verdict, filled by test_acceptance.py
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
