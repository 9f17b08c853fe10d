import pytest
from factory.random import reseed_random


@pytest.fixture(autouse=True)
def fixed_factory_seed():
    """Every test sees the same factory-boy random stream."""
    reseed_random("biharmonic")
    yield
