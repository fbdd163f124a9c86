import pytest

from centex import ABELIAN, FREE, Factor, GroupSpec, Tower


@pytest.fixture(scope="session")
def f2():
    return GroupSpec.free("a", "b")


@pytest.fixture(scope="session")
def mixed():
    return GroupSpec([Factor(FREE, ("a", "b")), Factor(ABELIAN, ("p", "q"))])


@pytest.fixture(scope="session")
def t1(f2):
    return Tower(f2).extend_centralizer("a", "t1")
