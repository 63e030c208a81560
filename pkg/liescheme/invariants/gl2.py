"""Discrete invariants of the two dimensional realization of gl(2)"""

# Standard modules
from dataclasses import dataclass

# Local modules
from ..core import numeric
from ..core.errors import DegenerateStencil, DomainViolation
from ..core.stencil import Stencil4
from .sim2 import AlphaWeight


@dataclass(frozen=True)
class Gl2Xi:
    """The five SL(2) difference invariants"""

    xi1: numeric.Real
    xi2: numeric.Real
    xi3: numeric.Real
    xi4: numeric.Real
    xi5: numeric.Real

    def values(self) -> tuple[numeric.Real, ...]:
        return self.xi1, self.xi2, self.xi3, self.xi4, self.xi5


def _check_domain(s: Stencil4) -> None:
    if not s[0].x > 0:
        raise DomainViolation(f"GL(2) invariants need positive abscissas, got {s.xs}!")


def gl2_xi(s: Stencil4) -> Gl2Xi:
    """Ordinate differences scaled by the geometric mean of their abscissas"""
    _check_domain(s)
    (x0, y0), (x1, y1), (x2, y2), (x3, y3) = s
    return Gl2Xi(
        (y3 - y2) / numeric.sqrt(x2 * x3),
        (y2 - y1) / numeric.sqrt(x1 * x2),
        (y1 - y0) / numeric.sqrt(x0 * x1),
        (y3 - y1) / numeric.sqrt(x1 * x3),
        (y2 - y0) / numeric.sqrt(x2 * x0),
    )


def _defect(xa, xb, xc, ya, yb, yc) -> numeric.Real:
    """(yc - ya)/sqrt(xa xc) - (yc - yb)/sqrt(xb xc) - (yb - ya)/sqrt(xa xb) without the leading cancellation"""
    ra, rb, rc = numeric.sqrt(xa), numeric.sqrt(xb), numeric.sqrt(xc)
    return ((yc - yb) * (xb - xa) / (ra + rb) - (yb - ya) * (xc - xb) / (rb + rc)) / (ra * rb * rc)


def gl2_defects(s: Stencil4) -> tuple[numeric.Real, numeric.Real]:
    """The combinations xi4 - xi1 - xi2 and xi5 - xi2 - xi3"""
    _check_domain(s)
    (x0, y0), (x1, y1), (x2, y2), (x3, y3) = s
    return _defect(x1, x2, x3, y1, y2, y3), _defect(x0, x1, x2, y0, y1, y2)


def gl2_brackets(s: Stencil4, xi: Gl2Xi) -> tuple[numeric.Real, numeric.Real]:
    """Right and left defects over their chord products"""
    if 0 in (xi.xi1, xi.xi2, xi.xi3, xi.xi1 + xi.xi2, xi.xi2 + xi.xi3):
        raise DegenerateStencil(f"GL(2) invariants degenerate for xi = {xi.values()}!")
    right, left = gl2_defects(s)
    return right / (xi.xi1 * (xi.xi1 + xi.xi2)), left / (xi.xi3 * (xi.xi2 + xi.xi3))


def gl2_j(s: Stencil4, w: AlphaWeight = AlphaWeight()) -> tuple[numeric.Real, numeric.Real]:
    """Discrete counterparts J1, J2 of the differential invariants I1, I2"""
    xi = gl2_xi(s)
    right, left = gl2_brackets(s, xi)
    total = xi.xi1 + xi.xi2 + xi.xi3
    if total == 0:
        raise DegenerateStencil(f"GL(2) invariants degenerate for xi = {xi.values()}!")
    j1 = 8 * (w.alpha * right + w.beta * left) / xi.xi2
    j2 = 12 / (xi.xi2 * total) * (right - left)
    return j1, j2
