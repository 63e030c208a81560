"""Contains the group element class and the prolonged group actions"""

# Standard modules
from dataclasses import dataclass, field
from typing import Sequence

# External modules
import numpy as np

# Local modules
from ..constants import SINGULAR_TOLERANCE, AlgebraId
from ..core import numeric
from ..core.errors import NotAGraph
from ..core.jet import Jet3
from ..core.point import Point
from ..core.stencil import Stencil4
from .flows import FLOW_LIMITS, FLOWS


@dataclass(frozen=True)
class GroupElement:
    """Finite transformation as a word of one-parameter flows, applied left to right

    algebra: the realization the generators belong to
    word: pairs (generator index starting at 1, flow parameter)
    extended: adds the x translation X4 to SL2Y (constant forcing)
    """

    algebra: AlgebraId
    word: tuple[tuple[int, float], ...] = field(default=())
    extended: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "algebra", AlgebraId(self.algebra))
        object.__setattr__(self, "word", tuple((int(mu), tau) for mu, tau in self.word))
        for mu, tau in self.word:
            if not 1 <= mu <= self.dimension:
                raise ValueError(f"Generator X{mu} does not exist in {self.algebra.value} (dimension {self.dimension})!")
            if not numeric.isfinite(tau):
                raise ValueError(f"Flow parameter of X{mu} must be finite, got {tau}!")

    @classmethod
    def identity(cls, algebra: AlgebraId) -> "GroupElement":
        return cls(algebra)

    @classmethod
    def random(cls, algebra: AlgebraId, rng: np.random.Generator, generators: Sequence[int] = None,
               extended: bool = False) -> "GroupElement":
        """Word of the generators in random order with parameters drawn inside the flow limits"""
        algebra = AlgebraId(algebra)
        if generators is None:
            generators = range(1, cls(algebra, extended=extended).dimension + 1)
        generators = list(generators)
        generators = [generators[i] for i in rng.permutation(len(generators))]
        limits = FLOW_LIMITS[algebra]
        return cls(algebra, tuple((mu, float(rng.uniform(-limits[mu], limits[mu]))) for mu in generators), extended)

    # PROPERTIES

    @property
    def dimension(self) -> int:
        if self.algebra is AlgebraId.SL2Y and self.extended:
            return 4
        return self.algebra.dimension

    # METHODS

    def parameter(self, generator: int) -> float:
        """Total flow parameter of one generator in the word"""
        return sum(tau for mu, tau in self.word if mu == generator)

    def inverse(self) -> "GroupElement":
        """The reversed word with negated parameters"""
        return GroupElement(self.algebra, tuple((mu, -tau) for mu, tau in reversed(self.word)), self.extended)

    # OVERLOADS

    def __repr__(self) -> str:
        word = " ".join(f"X{mu}({tau:.6g})" for mu, tau in self.word) or "identity"
        return f"GroupElement[{self.algebra.value}: {word}]"


def _transport(g: GroupElement, x, y) -> tuple:
    flow = FLOWS[g.algebra]
    for mu, tau in g.word:
        x, y = flow(mu, tau, x, y)
    return x, y


def apply(g: GroupElement, p: Point) -> Point:
    """Image of a point under the composition of flows"""
    return Point(*_transport(g, p.x, p.y))


def apply_stencil(g: GroupElement, s: Stencil4) -> Stencil4:
    """Pointwise image of a stencil, a reordering of the abscissas is an error"""
    return Stencil4(apply(g, p) for p in s)


def transform_jet(g: GroupElement, j: Jet3) -> Jet3:
    """Third order jet of the transformed curve at the transformed base point

    The Taylor representative (x + t, y(x + t)) is pushed through the flows as a
    truncated series and the parametric derivatives are converted to derivatives
    along the new abscissa.
    """

    if not g.word:
        return j
    x, y = _transport(g, *j.series())
    a1, a2, a3 = x[1], x[2], x[3]
    b1, b2, b3 = y[1], y[2], y[3]
    if not a1 > SINGULAR_TOLERANCE:
        raise NotAGraph(f"Transformed abscissa is not increasing along the curve (dX/dt = {a1})!")

    bend = 2 * (a1 * b2 - b1 * a2)
    bend_rate = 6 * (a1 * b3 - b1 * a3)
    return Jet3(x[0], y[0], b1 / a1, bend / a1 ** 3, (bend_rate * a1 - 6 * bend * a2) / a1 ** 5)


def _sampled_derivatives(g: GroupElement, j: Jet3, delta: float) -> tuple[np.ndarray, Point]:
    points = [apply(g, Point(x, j.taylor(x))) for x in (j.x + k * delta for k in range(-2, 3))]
    xs = np.array([p.x for p in points])
    ys = np.array([p.y for p in points])
    if not np.all(np.diff(xs) > 0):
        raise NotAGraph(f"Transformed samples are not monotone in x: {xs}!")
    c = np.polyfit(xs - points[2].x, ys - points[2].y, 4)
    return np.array([c[3], 2 * c[2], 6 * c[1]]), points[2]


def sample_transform_jet(g: GroupElement, j: Jet3, delta: float = 4e-3) -> Jet3:
    """Jet transport by mapping Taylor samples, differencing and Richardson extrapolation"""
    coarse, base = _sampled_derivatives(g, j, delta)
    fine, _ = _sampled_derivatives(g, j, delta / 2)
    orders = np.array([4, 3, 2])
    extrapolated = fine + (fine - coarse) / (2.0 ** orders - 1)
    return Jet3(base.x, base.y, *(float(v) for v in extrapolated))
