"""Contains the scheme specification, lattices and the step state"""

# Standard modules
from dataclasses import dataclass, field
from typing import Optional

# Local modules
from ..constants import (DEFAULT_ALPHA, NEWTON_MAX_ITERATIONS, NEWTON_TOLERANCE, ORDER_RAISING_ABC, AlgebraId,
                         SchemeKind)
from ..core import numeric
from ..core.errors import InvalidSpacing, OrderViolation
from ..core.point import Point
from ..core.stencil import Stencil4
from ..invariants.sim2 import AlphaWeight
from ..odes.spec import OdeSpec


LATTICE_KINDS = ("uniform", "geometric")

SCHEME_ALGEBRA = {
    SchemeKind.INV_SIM2: AlgebraId.SIM2,
    SchemeKind.INV_SL2: AlgebraId.SL2Y,
    SchemeKind.INV_GL2: AlgebraId.GL2XY,
}


@dataclass(frozen=True)
class Lattice:
    """Lattice equation h_{n+2} - ratio h_{n+1} = 0 of the Schwarzian scheme, zero for vanishing spacings"""

    kind: str = "uniform"
    ratio: float = 1.0

    def __post_init__(self) -> None:
        if self.kind not in LATTICE_KINDS:
            raise ValueError(f"Unknown lattice '{self.kind}', expected one of {LATTICE_KINDS}!")
        if not (numeric.isfinite(self.ratio) and self.ratio > 0):
            raise InvalidSpacing(f"Lattice ratio must be positive, got {self.ratio}!")

    @classmethod
    def geometric(cls, ratio: float) -> "Lattice":
        return cls("geometric", ratio)

    # PROPERTIES

    @property
    def factor(self) -> float:
        return self.ratio if self.kind == "geometric" else 1.0

    # METHODS

    def next_spacing(self, h_previous: numeric.Real) -> numeric.Real:
        return self.factor * h_previous

    # OVERLOADS

    def __call__(self, x: numeric.Real, h0: numeric.Real, h1: numeric.Real, h2: numeric.Real) -> numeric.Real:
        return h2 - self.factor * h1


@dataclass(frozen=True)
class SchemeSpec:
    """A four point scheme with its parameters

    kind: one of the invariant schemes or the standard baseline
    ode: the ODE the scheme approximates (K, F or A live there)
    alpha: weight of the right quotient in J1
    a, b, c: evaluation point x_n + a h_n + b h_{n+1} + c h_{n+2} of the forcing
    gamma: chord ratio of the GL(2) lattice, None measures it from the seed
    lattice: lattice equation of the Schwarzian scheme
    h: spacing of the standard baseline, None keeps the last seed spacing
    newton_tol: convergence threshold on the scaled residuals
    max_iter: maximum number of Newton iterations per step
    """

    kind: SchemeKind
    ode: OdeSpec
    alpha: float = DEFAULT_ALPHA
    a: float = ORDER_RAISING_ABC[0]
    b: float = ORDER_RAISING_ABC[1]
    c: float = ORDER_RAISING_ABC[2]
    gamma: Optional[float] = None
    lattice: Lattice = field(default_factory=Lattice)
    h: Optional[float] = None
    newton_tol: float = NEWTON_TOLERANCE
    max_iter: int = NEWTON_MAX_ITERATIONS

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", SchemeKind(self.kind))
        expected = SCHEME_ALGEBRA.get(self.kind)
        if expected is not None and self.ode.algebra is not expected:
            raise ValueError(f"Scheme {self.kind.value} needs a {expected.value} equation, got {self.ode.algebra.value}!")
        if not self.newton_tol > 0 or self.max_iter < 1:
            raise ValueError(f"Newton tolerance and iteration limit must be positive, got {self.newton_tol}, {self.max_iter}!")
        if self.gamma is not None and not self.gamma > 0:
            raise ValueError(f"Lattice ratio gamma must be positive, got {self.gamma}!")
        if self.h is not None and not self.h > 0:
            raise InvalidSpacing(f"Invalid spacing h={self.h}, must be positive!")
        for name in ("alpha", "a", "b", "c"):
            if not numeric.isfinite(getattr(self, name)):
                raise ValueError(f"Scheme parameter '{name}' must be finite!")

    # PROPERTIES

    @property
    def algebra(self) -> AlgebraId:
        return self.ode.algebra

    @property
    def weight(self) -> AlphaWeight:
        return AlphaWeight(self.alpha)

    @property
    def invariant(self) -> bool:
        return self.kind is not SchemeKind.STD


@dataclass(frozen=True)
class StepState:
    """The last three points (x_{n-1}, y_{n-1}), (x_n, y_n), (x_{n+1}, y_{n+1})"""

    points: tuple[Point, Point, Point]

    def __post_init__(self) -> None:
        points = tuple(p if isinstance(p, Point) else Point(*p) for p in self.points)
        if len(points) != 3:
            raise ValueError(f"A step state needs three points, got {len(points)}!")
        if not (points[0].x < points[1].x < points[2].x):
            raise OrderViolation(f"Step state abscissas must increase strictly, got {[p.x for p in points]}!")
        object.__setattr__(self, "points", points)

    # PROPERTIES

    @property
    def spacings(self) -> tuple[float, float]:
        p0, p1, p2 = self.points
        return p1.x - p0.x, p2.x - p1.x

    # METHODS

    def stencil(self, p: Point) -> Stencil4:
        """The stencil completed by a candidate point x_{n+2}"""
        return Stencil4(self.points + (p,))

    def advance(self, p: Point) -> "StepState":
        return StepState(self.points[1:] + (p,))
