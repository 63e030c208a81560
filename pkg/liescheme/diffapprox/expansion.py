"""Contains the fit of a scheme residual's expansion in the spacing scale"""

# Standard modules
from dataclasses import dataclass
from logging import Logger
from typing import Callable, Optional

# External modules
import mpmath
import numpy as np

# Local modules
from ..constants import CURVE_DPS, FIT_CONDITION_LIMIT, ON_SOLUTION_TOLERANCE
from ..core import numeric
from ..core.errors import DomainViolation, IllConditionedFit, InvalidSpacing
from ..core.jet import Jet3
from ..core.stencil import SpacingDirection, Stencil4
from ..odes.curve import SolutionCurve
from ..odes.spec import OdeSpec, residual


@dataclass(frozen=True)
class ExpansionReport:
    """Fitted coefficients of c0 + c1 eps + c2 eps^2 + ... for one residual

    eps_grid: the spacing scales the residual was sampled at, decreasing
    coefficients: all fitted coefficients, c0 first
    condition: condition number of the Vandermonde system in eps / eps0
    """

    c0: float
    c1: float
    c2: float
    fit_residual: float
    eps_grid: tuple[float, ...]
    coefficients: tuple[float, ...]
    degree: int
    condition: float

    # METHODS

    def coefficient(self, order: int) -> float:
        return self.coefficients[order] if 0 <= order <= self.degree else 0.0

    def scale(self, value: float = 0.0) -> float:
        """Magnitude the zero tests of this report are relative to"""
        return max(1.0, abs(self.c1) * self.eps_grid[0], abs(value))

    def dict(self) -> dict:
        return {
            "c0": self.c0,
            "c1": self.c1,
            "c2": self.c2,
            "fit_residual": self.fit_residual,
            "eps_grid": list(self.eps_grid),
            "coefficients": list(self.coefficients),
            "degree": self.degree,
            "condition": self.condition,
        }


def extract_expansion(functional: Callable[[Stencil4], numeric.Real], j: Jet3, direction: SpacingDirection,
                      eps0: float, levels: int, *, curve: Optional[SolutionCurve] = None, degree: int = 2,
                      ode: Optional[OdeSpec] = None, logger: Logger = None) -> ExpansionReport:
    """Least squares fit of a residual sampled on a solution at eps_k = eps0 2^-k

    functional: the residual, evaluated on stencils
    j: the on-solution jet at the reference point
    direction: spacing ratios of the stencils
    levels: number of scales, at least four and more than the degree
    curve: samples the exact solution, without it the cubic Taylor polynomial of j
    degree: degree of the fitted polynomial in eps
    ode: checks that j lies on a solution of this equation
    """

    if levels < 4 or degree < 2 or levels <= degree:
        raise ValueError(f"Need levels >= 4 and levels > degree >= 2, got levels={levels}, degree={degree}!")
    if not eps0 > 0:
        raise InvalidSpacing(f"Invalid spacing eps0={eps0}, must be positive!")
    if curve is not None and curve.jet.as_float() != j.as_float():
        raise ValueError(f"The solution curve does not pass through {j}!")
    if ode is not None:
        defect = residual(ode, j)
        if abs(defect) > ON_SOLUTION_TOLERANCE * max(1.0, abs(j.y3)):
            raise DomainViolation(f"Jet {j} is not on a solution (residual {float(defect):.3e})!")

    # Conditioning of the fit in t = eps / eps0
    ts = [2.0 ** -k for k in range(levels)]
    condition = float(np.linalg.cond(np.vander(np.array(ts), degree + 1, increasing=True)))
    if condition > FIT_CONDITION_LIMIT:
        raise IllConditionedFit(f"Vandermonde condition {condition:.3e} exceeds {FIT_CONDITION_LIMIT:.0e}!")

    dps = curve.dps if curve is not None else CURVE_DPS
    with mpmath.workdps(dps):
        scale0 = mpmath.mpf(eps0)
        values = []
        for t in ts:
            eps = scale0 * t
            if curve is not None:
                stencil = curve.stencil(direction, eps)
            else:
                stencil = Stencil4.sample(j.taylor, mpmath.mpf(j.x), direction, eps)
            values.append(mpmath.mpf(functional(stencil)))
        if logger:
            logger.debug(f"Sampled residual at {levels} scales from eps={eps0} ...")

        vandermonde = mpmath.matrix([[mpmath.mpf(t) ** i for i in range(degree + 1)] for t in ts])
        solution, norm = mpmath.qr_solve(vandermonde, mpmath.matrix(values))
        coefficients = tuple(float(solution[i] / scale0 ** i) for i in range(degree + 1))

    report = ExpansionReport(coefficients[0], coefficients[1], coefficients[2], float(norm),
                             tuple(eps0 * t for t in ts), coefficients, degree, condition)
    if logger:
        logger.debug(f"Fitted c0={report.c0:.6e}, c1={report.c1:.6e}, c2={report.c2:.6e} ...")
    return report
