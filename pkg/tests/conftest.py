import pytest

from cubehom.ingest import load_fixture


@pytest.fixture(params=["sq", "hsq", "hc3", "annulus"])
def grid_fixture(request):
    return (request.param,) + load_fixture(request.param)


@pytest.fixture
def sq():
    return load_fixture("sq")


@pytest.fixture
def hsq():
    return load_fixture("hsq")


@pytest.fixture
def hc3():
    return load_fixture("hc3")


@pytest.fixture
def circle():
    return load_fixture("circle")
