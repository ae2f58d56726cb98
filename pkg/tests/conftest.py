import pytest

from rnoeth.core import FiniteSemigroup, cyclic_group, left_zero, null_semigroup, right_zero


@pytest.fixture
def lz():
    return left_zero(2)


@pytest.fixture
def rz():
    return right_zero(2)


@pytest.fixture
def null():
    return null_semigroup(2)


@pytest.fixture
def c2():
    return cyclic_group(2)


@pytest.fixture
def min2():
    return FiniteSemigroup([[0, 0], [0, 1]], name="min")
