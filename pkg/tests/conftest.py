import pytest

from dpcharge.catalog import DEFAULT_CATALOG, generate


@pytest.fixture(scope="session")
def catalog():
    return {name: generate(name) for name in DEFAULT_CATALOG}
