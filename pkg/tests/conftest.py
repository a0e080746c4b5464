from fractions import Fraction

import pytest
from hypothesis import strategies as st

from xratio.projective import Mobius

ACCEPTANCE_LINES: list[str] = []


def small_rationals(bound: int = 50, max_den: int = 12):
    return st.builds(
        Fraction,
        st.integers(-bound, bound),
        st.integers(1, max_den),
    )


def mobius_maps(bound: int = 20):
    ints = st.integers(-bound, bound)
    return (
        st.tuples(ints, ints, ints, ints)
        .filter(lambda m: m[0] * m[3] - m[1] * m[2] != 0)
        .map(lambda m: Mobius(*m))
    )


def distinct_tuple(k: int, elements=None):
    elements = elements if elements is not None else small_rationals()
    return st.lists(elements, min_size=k, max_size=k, unique=True).map(tuple)


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
