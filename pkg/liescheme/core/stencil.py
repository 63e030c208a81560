"""Contains the four point stencil, spacing directions and discrete derivatives"""

# Standard modules
from dataclasses import dataclass
from typing import Callable, Iterable

# Local modules
from . import numeric
from .errors import InvalidSpacing, OrderViolation
from .jet import Jet3
from .point import Point


@dataclass(frozen=True)
class SpacingDirection:
    """Ratios alpha_k of the spacings h_{n+k} = alpha_k eps"""

    alpha: tuple[float, float, float]

    def __post_init__(self) -> None:
        if len(self.alpha) != 3:
            raise ValueError(f"A spacing direction needs three ratios, got {len(self.alpha)}!")
        if not all(numeric.isfinite(a) and a > 0 for a in self.alpha):
            raise InvalidSpacing(f"Spacing ratios must be positive and finite, got {self.alpha}!")

    @classmethod
    def uniform(cls) -> "SpacingDirection":
        return cls((1.0, 1.0, 1.0))

    # METHODS

    def offsets(self, eps: numeric.Real) -> tuple[numeric.Real, ...]:
        """Abscissa offsets of the four stencil points from the reference point"""
        a0, a1, a2 = self.alpha
        return -a0 * eps, 0 * eps, a1 * eps, (a1 + a2) * eps

    def spacings(self, eps: numeric.Real) -> tuple[numeric.Real, ...]:
        return tuple(a * eps for a in self.alpha)


class Stencil4(tuple):
    """Four points (x_{n-1}, x_n, x_{n+1}, x_{n+2}) with strictly increasing abscissas"""

    def __new__(cls, points: Iterable[Point]) -> "Stencil4":
        points = tuple(p if isinstance(p, Point) else Point(*p) for p in points)
        if len(points) != 4:
            raise ValueError(f"A stencil needs four points, got {len(points)}!")
        for left, right in zip(points, points[1:]):
            if not right.x > left.x:
                raise OrderViolation(f"Stencil abscissas must increase strictly, got {[p.x for p in points]}!")
        return tuple.__new__(cls, points)

    @classmethod
    def sample(cls, function: Callable[[numeric.Real], numeric.Real], x: numeric.Real,
               direction: SpacingDirection, eps: numeric.Real) -> "Stencil4":
        """Sample a function around the reference abscissa x at spacings alpha_k eps"""
        if not eps > 0:
            raise InvalidSpacing(f"Invalid spacing eps={eps}, must be positive!")
        return cls(Point(x + offset, function(x + offset)) for offset in direction.offsets(eps))

    # PROPERTIES

    @property
    def xs(self) -> tuple[numeric.Real, ...]:
        return tuple(p.x for p in self)

    @property
    def ys(self) -> tuple[numeric.Real, ...]:
        return tuple(p.y for p in self)

    @property
    def base(self) -> Point:
        """The reference point (x_n, y_n)"""
        return self[1]

    @property
    def spacings(self) -> tuple[numeric.Real, numeric.Real, numeric.Real]:
        """The spacings (h_n, h_{n+1}, h_{n+2})"""
        return self[1].x - self[0].x, self[2].x - self[1].x, self[3].x - self[2].x

    # METHODS

    def as_float(self) -> "Stencil4":
        return Stencil4(p.as_float() for p in self)

    # OVERLOADS

    def __repr__(self) -> str:
        return f"Stencil4[{', '.join(str(p) for p in self)}]"


def stencil_from_jet(j: Jet3, direction: SpacingDirection, eps: numeric.Real) -> Stencil4:
    """Sample the cubic Taylor polynomial of a jet with the jet's abscissa at index 1"""
    return Stencil4.sample(j.taylor, j.x, direction, eps)


def divided_differences(xs: tuple, ys: tuple) -> list:
    """Leading Newton divided differences [y0], [y0, y1], ... over the given nodes"""
    table = list(ys)
    leading = [table[0]]
    for order in range(1, len(xs)):
        table = [(table[i + 1] - table[i]) / (xs[i + order] - xs[i]) for i in range(len(table) - 1)]
        leading.append(table[0])
    return leading


def discrete_derivatives(s: Stencil4) -> tuple[numeric.Real, numeric.Real, numeric.Real]:
    """Factorial scaled divided differences anchored at the first stencil point"""
    _, d1, d2, d3 = divided_differences(s.xs, s.ys)
    return d1, 2 * d2, 6 * d3
