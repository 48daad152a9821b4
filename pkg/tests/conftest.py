import os
import sys

import pytest
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from alexspace import FiniteSpace  # noqa: E402

ACCEPTANCE_LINES = []


@pytest.fixture
def sierpinski():
    return FiniteSpace.from_basis([[0], [0, 1]])


@pytest.fixture
def record_acceptance():
    def record(criterion, passed, detail=""):
        ACCEPTANCE_LINES.append(f"[{'PASS' if passed else 'FAIL'}] criterion {criterion}: {detail}")
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def spaces(draw, max_n=6):
    """Random finite spaces: reflexive-transitive closure of a random relation."""
    n = draw(st.integers(1, max_n))
    rows = [draw(st.integers(0, (1 << n) - 1)) | (1 << x) for x in range(n)]
    changed = True
    while changed:
        changed = False
        for x in range(n):
            acc = rows[x]
            for y in range(n):
                if (rows[x] >> y) & 1:
                    acc |= rows[y]
            if acc != rows[x]:
                rows[x] = acc
                changed = True
    return FiniteSpace(n, tuple(rows))


@st.composite
def self_maps(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    return tuple(draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n)))
