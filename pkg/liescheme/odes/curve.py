"""Contains the high precision solution curve used for residual expansions"""

# Standard modules
from logging import Logger

# External modules
import mpmath

# Local modules
from ..constants import CURVE_DPS
from ..core.jet import Jet3
from ..core.stencil import SpacingDirection, Stencil4
from .spec import InitialData, OdeSpec, rhs


class SolutionCurve:
    """Solution of an ODE through a jet, evaluated with a high order Taylor method in mpmath

    Abscissas left of the base point are reached through the reflected solution
    z(s) = y(2 x0 - s), which again runs forward in s.
    """

    def __init__(self, spec: OdeSpec, init: InitialData, dps: int = CURVE_DPS, logger: Logger = None) -> None:

        self.spec: OdeSpec = spec
        self.dps: int = dps
        self.jet: Jet3 = init.jet(spec)

        if logger:
            logger.debug(f"Build solution curve through {self.jet} with {dps} digits ...")
        with mpmath.workdps(dps):
            self._x0 = mpmath.mpf(init.x0)
            y = [mpmath.mpf(init.y0), mpmath.mpf(init.y1), mpmath.mpf(init.y2)]
            tol = mpmath.mpf(10) ** (2 - dps)
            x0 = self._x0
            self._forward = mpmath.odefun(
                lambda x, s: [s[1], s[2], rhs(spec, x, s[0], s[1], s[2])], x0, y, tol=tol)
            self._backward = mpmath.odefun(
                lambda x, s: [s[1], s[2], -rhs(spec, 2 * x0 - x, s[0], -s[1], s[2])], x0, [y[0], -y[1], y[2]], tol=tol)

    # METHODS

    def stencil(self, direction: SpacingDirection, eps) -> Stencil4:
        """Stencil of exact solution values around the base point"""
        with mpmath.workdps(self.dps):
            return Stencil4.sample(self, self._x0, direction, mpmath.mpf(eps))

    # OVERLOADS

    def __call__(self, x) -> mpmath.mpf:
        with mpmath.workdps(self.dps):
            x = mpmath.mpf(x)
            if x >= self._x0:
                return self._forward(x)[0]
            return self._backward(2 * self._x0 - x)[0]

    def __repr__(self) -> str:
        return f"SolutionCurve[{self.spec.algebra.value}, base={self.jet}]"
