import pytest

from homhom import kernels
from homhom.catalog import example1

@pytest.fixture
def ex1():
    return example1()


@pytest.fixture(params=kernels.available())
def backend(request):
    with kernels.using(request.param):
        yield request.param
