import pytest

from wzslab.group_module import identity_weights, make_group, plus_minus
from wzslab.logger import logger
from wzslab.monoid_module import MonoidHandle

@pytest.fixture(autouse=True)
def quiet_logger():
    logger.verbose = False
    logger.quiet = True
    yield
    logger.quiet = False

@pytest.fixture
def c3():
    return make_group([3])

@pytest.fixture
def c5():
    return make_group([5])

@pytest.fixture
def pm_c3(c3):
    return MonoidHandle(c3, plus_minus(c3))

@pytest.fixture
def plain_c5(c5):
    return MonoidHandle(c5, identity_weights(c5))

@pytest.fixture
def pm_c5(c5):
    return MonoidHandle(c5, plus_minus(c5))
