import pytest

from omega_kernel.module import cyclic, free
from omega_kernel.ring import ring_new


@pytest.fixture
def S2():
    return ring_new(["x", "y"], [1, 1], 2)


@pytest.fixture
def S4():
    return ring_new(["x", "y", "z", "w"], [1, 1, 1, 1], 2)


@pytest.fixture
def two_planes(S4):
    x, y, z, w = S4.gens()
    return cyclic(S4, [x * z, x * w, y * z, y * w])


@pytest.fixture
def x2_xy(S2):
    x, y = S2.gens()
    return cyclic(S2, [x**2, x * y])


@pytest.fixture
def xy_xz():
    R = ring_new(["x", "y", "z"], [1, 1, 1], 2)
    x, y, z = R.gens()
    return cyclic(R, [x * y, x * z])


@pytest.fixture
def free_S(S2):
    return free(S2, [0])


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
