"""Differential invariants of the three realizations"""

# Local modules
from ..constants import AlgebraId
from ..core import numeric
from ..core.errors import DegenerateJet
from ..core.jet import Jet3


def sim2_invariants(j: Jet3) -> dict[str, numeric.Real]:
    w = 1 + j.y1 ** 2
    rate = w * j.y3 - 3 * j.y1 * j.y2 ** 2
    result = {"I1": j.y2 / (w * numeric.sqrt(w)), "I2": rate / w ** 3}
    if j.y2 == 0:
        raise DegenerateJet("The similitude invariant I needs y'' != 0!")
    result["I"] = rate / j.y2 ** 2
    return result


def schwarzian(j: Jet3) -> numeric.Real:
    """Schwarzian derivative (y' y''' - 3/2 y''^2) / y'^2"""
    if j.y1 == 0:
        raise DegenerateJet("The Schwarzian derivative needs y' != 0!")
    return (j.y1 * j.y3 - 1.5 * j.y2 ** 2) / j.y1 ** 2


def gl2_invariants(j: Jet3) -> dict[str, numeric.Real]:
    if j.y1 == 0 or j.x == 0:
        raise DegenerateJet("The GL(2) invariants need x != 0 and y' != 0!")
    i1 = (2 * j.x * j.y2 + j.y1) / j.y1 ** 3
    i2 = j.x ** 2 * (j.y1 * j.y3 - 3 * j.y2 ** 2) / j.y1 ** 5
    result = {"I1": i1, "I2": i2}
    if i1 > 0:
        result["ratio"] = i2 / numeric.power_3_2(i1)
    return result


def continuous_invariants(algebra: AlgebraId, j: Jet3, params=None) -> dict[str, numeric.Real]:
    """Differential invariants of a jet

    SIM2: I1, I2 and the dilation invariant I = I2 / I1^2
    SL2Y: the Schwarzian S
    GL2XY: I1, I2 and, for I1 > 0, the GL(2) invariant ratio I2 / I1^(3/2)
    """

    algebra = AlgebraId(algebra)
    if algebra is AlgebraId.SIM2:
        return sim2_invariants(j)
    if algebra is AlgebraId.SL2Y:
        return {"S": schwarzian(j)}
    return gl2_invariants(j)
