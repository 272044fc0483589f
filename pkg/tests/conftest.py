import random

import pytest

from transferlab.catalog import (
    alternating,
    cyclic,
    dihedral,
    generalized_quaternion,
    psl2,
    symmetric,
)


@pytest.fixture
def rng():
    return random.Random(20260825)


@pytest.fixture(scope="session")
def s3():
    return symmetric(3)


@pytest.fixture(scope="session")
def s4():
    return symmetric(4)


@pytest.fixture(scope="session")
def s5():
    return symmetric(5)


@pytest.fixture(scope="session")
def a4():
    return alternating(4)


@pytest.fixture(scope="session")
def a5():
    return alternating(5)


@pytest.fixture(scope="session")
def d8():
    return dihedral(8)


@pytest.fixture(scope="session")
def d16():
    return dihedral(16)


@pytest.fixture(scope="session")
def q8():
    return generalized_quaternion(8)


@pytest.fixture(scope="session")
def q16():
    return generalized_quaternion(16)


@pytest.fixture(scope="session")
def c12():
    return cyclic(12)


@pytest.fixture(scope="session")
def psl217():
    return psl2(17)
