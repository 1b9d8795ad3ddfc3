"""
Shared fixtures for the test suite.
"""

import sys
from pathlib import Path

import pytest

# Add repo root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.cli.fixtures import EXAMPLE_CAGE, load_fixture, worked_example
from src.polycore import dual, rank_zero, uniform

# Base points of the worked example
EXAMPLE_BASE_POINTS = [
    (0, 1, 4), (0, 2, 3), (1, 0, 4), (1, 1, 3), (1, 2, 2), (2, 0, 3), (2, 1, 2), (2, 2, 1),
]

EXAMPLE_DUAL_POINTS = [
    (0, 0, 3), (0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 1, 1), (1, 2, 0), (2, 0, 1), (2, 1, 0),
]

# K-polynomial of the worked example: {exponent: coefficient}
EXAMPLE_KPOLY = {
    (2, 2, 3): 1, (2, 1, 4): 1, (1, 2, 4): 1,
    (2, 2, 2): -2, (2, 1, 3): -2, (1, 2, 3): -2, (2, 0, 4): -1, (1, 1, 4): -2, (0, 2, 4): -1,
    (2, 2, 1): 1, (2, 1, 2): 1, (1, 2, 2): 1, (2, 0, 3): 1, (1, 1, 3): 1, (0, 2, 3): 1,
    (1, 0, 4): 1, (0, 1, 4): 1,
}

# Cave polynomial of the dual of the worked example
EXAMPLE_DUAL_CAVE = {
    (2, 1, 0): 1, (1, 2, 0): 1, (2, 0, 1): 1, (1, 1, 1): 1, (0, 2, 1): 1, (1, 0, 2): 1,
    (0, 1, 2): 1, (0, 0, 3): 1,
    (2, 0, 0): -1, (1, 1, 0): -2, (0, 2, 0): -1, (1, 0, 1): -2, (0, 1, 1): -2, (0, 0, 2): -2,
    (1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1,
}


@pytest.fixture
def example():
    """The worked example with cage (2,2,4)"""
    return worked_example()


@pytest.fixture
def example_dual(example):
    return dual(example, EXAMPLE_CAGE)


@pytest.fixture
def u12():
    return uniform(2, (1, 1), 1)


@pytest.fixture
def zero_rank():
    return rank_zero(2, (1, 1))


@pytest.fixture
def u23():
    return load_fixture("U(2;1,1,1)")
