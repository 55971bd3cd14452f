import random

import pytest

from gridknot.grid import validate
from gridknot.suites import random_braid_word, random_grid


@pytest.fixture
def u2():
    """The 2x2 unknot grid."""
    return validate(2, [1, 0], [0, 1])


@pytest.fixture
def g5():
    """A 5x5 single-component diagonal grid."""
    return validate(5, [1, 2, 3, 4, 0], [4, 0, 1, 2, 3])


@pytest.fixture
def rnd():
    return random.Random(20240817)


@pytest.fixture
def make_grid(rnd):
    return lambda n: random_grid(n, rnd)


@pytest.fixture
def make_word(rnd):
    return lambda strands, length: random_braid_word(strands, length, rnd)
