import pytest

from genusmass.class_group import build_class_group


@pytest.fixture(scope="session")
def cg20():
    return build_class_group(-20)


@pytest.fixture(scope="session")
def cg23():
    return build_class_group(-23)


@pytest.fixture(scope="session")
def cg84():
    return build_class_group(-84)
