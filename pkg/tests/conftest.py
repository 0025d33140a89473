import pytest

from stirgamma.bernoulli import build_table
from stirgamma.stirling import default_series


@pytest.fixture(scope="session")
def series():
    return default_series()


@pytest.fixture(scope="session")
def table60():
    return build_table(60)
