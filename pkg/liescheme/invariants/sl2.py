"""Discrete invariants of the Moebius action on y"""

# Local modules
from ..core import numeric
from ..core.errors import DegenerateStencil
from ..core.stencil import Stencil4


def sl2_cross_ratio(s: Stencil4) -> numeric.Real:
    """Cross-ratio R of the four ordinates"""
    y0, y1, y2, y3 = s.ys
    denominator = (y3 - y2) * (y1 - y0)
    if denominator == 0:
        raise DegenerateStencil(f"Cross-ratio undefined for repeated ordinates {s.ys}!")
    return (y3 - y1) * (y2 - y0) / denominator


def spacing_cross_ratio(h0: numeric.Real, h1: numeric.Real, h2: numeric.Real) -> numeric.Real:
    """Cross-ratio of the abscissas, equal to R on Moebius data"""
    return (h2 + h1) * (h1 + h0) / (h0 * h2)


def spacing_weight(h0: numeric.Real, h1: numeric.Real, h2: numeric.Real) -> numeric.Real:
    """Prefactor of the bracket in J1"""
    return 6 * h2 * h0 / (h1 * (h1 + h2) * (h0 + h1) * (h0 + h1 + h2))


def sl2_j1(s: Stencil4) -> numeric.Real:
    """Discrete Schwarzian derivative"""
    return spacing_weight(*s.spacings) * (spacing_cross_ratio(*s.spacings) - sl2_cross_ratio(s))
