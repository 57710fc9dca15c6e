from __future__ import annotations

import pytest
from hypothesis import strategies as st

from flagbott.rootsystem import Weight, build_root_system

SMALL_TYPES = [("A", 2), ("B", 2), ("G", 2), ("A", 3), ("B", 3)]


@pytest.fixture(scope="session")
def A2():
    return build_root_system("A", 2)


def weights(rank: int, lo: int = -6, hi: int = 6):
    return st.lists(st.integers(lo, hi), min_size=rank, max_size=rank).map(Weight)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.REPORT:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.REPORT:
            terminalreporter.write_line(line)
