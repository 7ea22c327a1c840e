import pytest

from hsw import datum_preset


@pytest.fixture(scope="session")
def a1():
    return datum_preset("A1")


@pytest.fixture(scope="session")
def a2():
    return datum_preset("A2")


@pytest.fixture(scope="session")
def b2():
    return datum_preset("B2")


@pytest.fixture(scope="session")
def g2():
    return datum_preset("G2")
