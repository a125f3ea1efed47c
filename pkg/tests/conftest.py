from fractions import Fraction
from pathlib import Path

import pytest

from diamax import convex_hull

DATA = Path(__file__).resolve().parent.parent / "data"


def q(*xs):
    return tuple(Fraction(x) for x in xs)


def box(lo, hi):
    """Axis-aligned rectangle from corner tuples."""
    return convex_hull([q(x, y) for x in (lo[0], hi[0]) for y in (lo[1], hi[1])])


@pytest.fixture
def ex2_triangle():
    return convex_hull([q(0, 0), q(1, 0), q(1, 1)])


@pytest.fixture
def ex1b_triangle():
    return convex_hull([q(1, 1, 0), q(1, 0, 1), q(0, 1, 1)])


@pytest.fixture
def segment():
    return convex_hull([q(0, 0), q(1, 0)])


@pytest.fixture
def unit_square():
    return box((0, 0), (1, 1))


# acceptance criteria report one line each at the end of the run
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(f"criterion {n}: {ACCEPTANCE[n]}")
