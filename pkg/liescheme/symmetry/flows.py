"""Closed-form one-parameter flows of the three Lie algebra realizations

Every flow accepts plain numbers as well as truncated power series, so the same
formulas move points and Taylor representatives of curves.
"""

# Standard modules
from typing import Callable

# Local modules
from ..constants import SINGULAR_TOLERANCE, AlgebraId
from ..core import numeric
from ..core.errors import SingularTransform
from ..core.series import Series


Flow = Callable[[int, float, object, object], tuple]


def _nonsingular(denominator):
    value = denominator.value if isinstance(denominator, Series) else denominator
    if abs(value) < SINGULAR_TOLERANCE:
        raise SingularTransform(f"Flow denominator {value} vanishes!")
    return denominator


def sim2_flow(generator: int, tau: float, x, y) -> tuple:
    """Similitude group: translations, rotation y d/dx - x d/dy and dilation"""
    if generator == 1:
        return x + tau, y
    if generator == 2:
        return x, y + tau
    if generator == 3:
        c, s = numeric.cos(tau), numeric.sin(tau)
        return x * c + y * s, -(x * s) + y * c
    e = numeric.exp(tau)
    return x * e, y * e


def sl2y_flow(generator: int, tau: float, x, y) -> tuple:
    """Moebius transformations of y, generator 4 is the translation in x"""
    if generator == 1:
        return x, y + tau
    if generator == 2:
        return x, y * numeric.exp(tau)
    if generator == 3:
        return x, y / _nonsingular(1 - tau * y)
    return x + tau, y


def gl2xy_flow(generator: int, tau: float, x, y) -> tuple:
    """Two dimensional realization of gl(2)"""
    if generator == 1:
        return x, y + tau
    if generator == 2:
        e = numeric.exp(tau)
        return x * e, y * e
    if generator == 3:
        d = _nonsingular(1 - tau * y)
        return x / (d * d), y / d
    return x * numeric.exp(tau), y


FLOWS: dict[AlgebraId, Flow] = {
    AlgebraId.SIM2: sim2_flow,
    AlgebraId.SL2Y: sl2y_flow,
    AlgebraId.GL2XY: gl2xy_flow,
}

# Bounds of the random flow parameters keeping test configurations away from singular maps
FLOW_LIMITS: dict[AlgebraId, dict[int, float]] = {
    AlgebraId.SIM2: {1: 1.0, 2: 1.0, 3: 0.3, 4: 0.5},
    AlgebraId.SL2Y: {1: 1.0, 2: 0.5, 3: 0.2, 4: 1.0},
    AlgebraId.GL2XY: {1: 1.0, 2: 0.5, 3: 0.05, 4: 0.5},
}

# Generators acting by a scaling on the discrete invariants
SCALING_GENERATORS: dict[AlgebraId, int] = {
    AlgebraId.SIM2: 4,
    AlgebraId.GL2XY: 4,
}
