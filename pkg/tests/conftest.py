import pytest

from qdc.catalog import get_catalog


@pytest.fixture(scope="session")
def cat():
    return get_catalog()


@pytest.fixture(scope="session")
def cat_q2():
    return get_catalog(q0=2)
