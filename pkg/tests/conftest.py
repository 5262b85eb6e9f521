import hypothesis
import pytest

from bifill.gf import parse_field_spec

hypothesis.settings.register_profile(
    "fixed", derandomize=True, deadline=None, max_examples=60
)
hypothesis.settings.load_profile("fixed")


@pytest.fixture(scope="session")
def gf2():
    return parse_field_spec("q=2")


@pytest.fixture(scope="session")
def gf3():
    return parse_field_spec("q=3")


@pytest.fixture(scope="session")
def gf4():
    return parse_field_spec("q=4")


@pytest.fixture(scope="session")
def gf5():
    return parse_field_spec("q=5")


@pytest.fixture(scope="session")
def gf9():
    return parse_field_spec("q=9")
