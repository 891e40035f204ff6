import pytest

from rcards.core import DealSpec
from rcards.designs import example4_family, orbit_strategy, strategy_from_designs
from rcards.fixtures import figure1_strategy, figure2_strategy
from rcards.search import enumerate_designs, max_disjoint_family


@pytest.fixture(scope="session")
def fig1():
    return figure1_strategy()


@pytest.fixture(scope="session")
def fig2():
    return figure2_strategy()


@pytest.fixture(scope="session")
def ex4():
    return strategy_from_designs(example4_family(), DealSpec(4, 3, 1), gamma=2)


@pytest.fixture(scope="session")
def orbit():
    return orbit_strategy(example4_family()[0])


@pytest.fixture(scope="session")
def sts7_all():
    return enumerate_designs(2, 7, 3)


@pytest.fixture(scope="session")
def sts9_all():
    return enumerate_designs(2, 9, 3)


@pytest.fixture(scope="session")
def sts9_large_set(sts9_all):
    return list(max_disjoint_family(sts9_all).family)


@pytest.fixture(scope="session")
def sts9_strategy(sts9_large_set):
    return strategy_from_designs(sts9_large_set, DealSpec(3, 5, 1))
