import numpy as np
import pytest

from gabidulin.code import GabidulinCode
from gabidulin.field import FieldCtx
from gabidulin.kernels import available_backends

# filled by tests/test_acceptance.py, printed at the end of the run
ACCEPTANCE_LINES = []


@pytest.fixture(params=available_backends())
def backend(request):
    return request.param


@pytest.fixture
def F8():
    return FieldCtx(2, 3, [1, 1, 0, 1])


@pytest.fixture
def code15(F8):
    a = F8.alpha
    return GabidulinCode(F8, 3, 2, (F8.one, a, a**2))


@pytest.fixture
def r15(F8):
    a = F8.alpha
    return [a + 1, F8.zero, a]


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
