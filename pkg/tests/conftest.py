import pytest

from cleangrowth import make_params


@pytest.fixture(scope="session")
def headline_params():
    """alpha = 1/3, sigma = 10, psi = alpha^2, gamma = 1, eta = 0.02."""
    return make_params(1.0 / 3.0, 10.0, 1.0 / 9.0, 1.0, 0.02, 0.02)


@pytest.fixture(scope="session")
def weak_substitute_params():
    """Parameters with -phi - 1 < 0, where interior allocations exist."""
    return make_params(0.5, 1.5, 1.0, 1.0, 0.5, 0.5)
