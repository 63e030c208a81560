"""Shared fixtures of the test suite"""

# External modules
import numpy as np
import pytest

# Local modules
from liescheme.constants import AlgebraId
from liescheme.odes import Forcing, InitialData, OdeSpec


# Moebius curve (2x + 1)/(x + 3) and its derivatives
def mobius(x: float) -> float:
    return (2 * x + 1) / (x + 3)


def mobius_init(x0: float = 0.0) -> InitialData:
    d = x0 + 3
    return InitialData(x0, mobius(x0), 5 / d ** 2, -10 / d ** 3)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240517)


@pytest.fixture
def sim2_ode() -> OdeSpec:
    return OdeSpec.sim2(1.0)


@pytest.fixture
def sl2_ode() -> OdeSpec:
    return OdeSpec.sl2y(Forcing("sin"))


@pytest.fixture
def mobius_ode() -> OdeSpec:
    return OdeSpec.sl2y(Forcing("zero"))


@pytest.fixture
def gl2_ode() -> OdeSpec:
    return OdeSpec.gl2xy(-1.0)


@pytest.fixture
def odes(sim2_ode, sl2_ode, gl2_ode) -> dict[AlgebraId, OdeSpec]:
    return {AlgebraId.SIM2: sim2_ode, AlgebraId.SL2Y: sl2_ode, AlgebraId.GL2XY: gl2_ode}
