import pytest

from hopfalg import catalog


@pytest.fixture(scope="session")
def A000():
    return catalog.make_A(0, 0, 0)


@pytest.fixture(scope="session")
def A100():
    return catalog.make_A(1, 0, 0)


@pytest.fixture(scope="session")
def A001():
    return catalog.make_A(0, 0, 1)


@pytest.fixture(scope="session")
def A111():
    return catalog.make_A(1, 1, 1)


@pytest.fixture(scope="session")
def B0():
    return catalog.make_B(0)


@pytest.fixture(scope="session")
def B1():
    return catalog.make_B(1)


@pytest.fixture(scope="session")
def D01():
    return catalog.make_D(0, 1, 0, 0, 0, 0, 0, 0)


@pytest.fixture(scope="session")
def E110():
    return catalog.make_E(1, 1, 0)


@pytest.fixture(scope="session")
def F010():
    return catalog.make_F(0, 1, 0)


@pytest.fixture(scope="session")
def K():
    return catalog.make_K()
