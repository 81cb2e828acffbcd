import pytest

from thetagraded.extract import example_sl_2n1, example_sl_nk, extract_coordinates
from thetagraded.graded import assemble


@pytest.fixture(scope="session")
def ex7():
    return extract_coordinates(example_sl_2n1(3))


@pytest.fixture(scope="session")
def ex9():
    return extract_coordinates(example_sl_2n1(4))


@pytest.fixture(scope="session")
def alg7(ex7):
    return assemble(ex7.data)


@pytest.fixture(scope="session")
def alg9(ex9):
    return assemble(ex9.data)


@pytest.fixture(scope="session")
def exnk31():
    return extract_coordinates(example_sl_nk(3, 1))
