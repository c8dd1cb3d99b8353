import pytest

from char2sym import BinaryField, RationalFunctionField


@pytest.fixture(scope="session")
def gf2():
    return BinaryField(1)


@pytest.fixture(scope="session")
def gf4():
    return BinaryField(2)


@pytest.fixture(scope="session")
def gf8():
    return BinaryField(3)


@pytest.fixture(scope="session")
def f2t():
    return RationalFunctionField()
