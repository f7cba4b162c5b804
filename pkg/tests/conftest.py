import math

import pytest

from fibword.trees import enumerate_trees


@pytest.fixture(scope="session")
def small_trees():
    """Every labeled tree with 2 <= n <= 7."""
    return {n: list(enumerate_trees(n)) for n in range(2, 8)}


def exact_fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


PHI = (1 + math.sqrt(5)) / 2


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(RESULTS):
        ok, detail = RESULTS[num]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {num:2d}: {detail}")
