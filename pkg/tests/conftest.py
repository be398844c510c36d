import random

import pytest
from hypothesis import strategies as st

from thincells.setfam import Permutation, Subset


@pytest.fixture
def rng():
    return random.Random(20240611)


@st.composite
def permutations_of(draw, n):
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


@st.composite
def subsets_of(draw, n):
    return Subset(draw(st.integers(0, (1 << n) - 1)), n)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
