import pytest

from dicots import Store
from dicots.selftest import day2_population, day3_sample


@pytest.fixture(scope="session")
def store():
    """One store for the whole run so memo tables are shared across tests."""
    return Store()


@pytest.fixture(scope="session")
def day2(store):
    return day2_population(store)


@pytest.fixture(scope="session")
def day3_big(store):
    """The acceptance-scale day-3 sample; module tests slice a prefix."""
    return day3_sample(store, 10000)
