import pytest

from pathsmt.rootsys import RootSystem


@pytest.fixture(scope="session")
def A1():
    return RootSystem.from_name("A1")


@pytest.fixture(scope="session")
def A2():
    return RootSystem.from_name("A2")


@pytest.fixture(scope="session")
def A3():
    return RootSystem.from_name("A3")


@pytest.fixture(scope="session")
def B2():
    return RootSystem.from_name("B2")


@pytest.fixture(scope="session")
def G2():
    return RootSystem.from_name("G2")
