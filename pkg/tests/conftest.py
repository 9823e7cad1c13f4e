import numpy as np
import pytest

from arbelos import geom


@pytest.fixture(scope="session")
def configs():
    """1000 valid configurations spanning six decades of R."""
    rng = np.random.default_rng(20180804)
    R = 10.0 ** rng.uniform(-3, 3, 1000)
    T = R * rng.uniform(0, 1, 1000)
    return [geom.validate_config(r, t) for r, t in zip(R.tolist(), T.tolist())]


@pytest.fixture(scope="session")
def offsets():
    """1000 (R, n) pairs with N strictly inside AB."""
    rng = np.random.default_rng(304)
    R = 10.0 ** rng.uniform(-3, 3, 1000)
    n = R * rng.uniform(-1, 1, 1000)
    return list(zip(R.tolist(), n.tolist()))
