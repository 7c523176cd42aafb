import pytest

from deltabeta import QuadratureConfig


@pytest.fixture(scope="session")
def cfg():
    return QuadratureConfig()


@pytest.fixture(scope="session")
def tight_cfg():
    return QuadratureConfig(abs_tol=1e-13, rel_tol=1e-12)
