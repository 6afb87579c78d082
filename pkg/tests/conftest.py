from itertools import product

import pytest
from hypothesis import strategies as st

from fusscat.partitions import StaircasePartition


def brute_partitions(n, m):
    """Every tuple in the staircase box, filtered for monotonicity."""
    ranges = [range(m * (n - i) + 1) for i in range(n)]
    return [t for t in product(*ranges) if all(a >= b for a, b in zip(t, t[1:]))]


@st.composite
def staircase_partitions(draw, max_n=6, max_m=4):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(1, max_m))
    parts = []
    cap = m * n
    for i in range(1, n + 1):
        v = draw(st.integers(0, min(cap, m * (n - i + 1))))
        parts.append(v)
        cap = v
    return StaircasePartition(n, m, tuple(parts))


@pytest.fixture
def grid_small():
    return [(n, m) for n in range(1, 5) for m in range(1, 4)]


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
