import pytest

from mcgv.surface import build_model
from mcgv.homology import homology_of
from mcgv.curves import engine_of


@pytest.fixture(scope="session")
def model3():
    return build_model(3)


@pytest.fixture(scope="session")
def hom3(model3):
    return homology_of(model3)


@pytest.fixture(scope="session")
def engine3(model3, hom3):
    return engine_of(model3, hom3)


@pytest.fixture(scope="session")
def model14():
    return build_model(14)


@pytest.fixture(scope="session")
def hom14(model14):
    return homology_of(model14)


@pytest.fixture(scope="session")
def engine14(model14, hom14):
    return engine_of(model14, hom14)


@pytest.fixture(scope="session")
def model5():
    return build_model(5)


@pytest.fixture(scope="session")
def hom5(model5):
    return homology_of(model5)


@pytest.fixture(scope="session")
def engine5(model5, hom5):
    return engine_of(model5, hom5)
