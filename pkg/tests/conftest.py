import random

import pytest

from frobpoly.fields import RationalFunctionField


@pytest.fixture
def rng():
    return random.Random(0)


@pytest.fixture
def K21():
    return RationalFunctionField(2, 1)


@pytest.fixture
def K22():
    return RationalFunctionField(2, 2)
