"""Discrete invariants of the similitude group on a four point stencil"""

# Standard modules
from dataclasses import dataclass

# Local modules
from ..constants import DEFAULT_ALPHA
from ..core import numeric
from ..core.stencil import Stencil4


@dataclass(frozen=True)
class AlphaWeight:
    """Weight alpha of the right difference quotient, the left one gets 1 - alpha"""

    alpha: float = DEFAULT_ALPHA

    def __post_init__(self) -> None:
        if not numeric.isfinite(self.alpha):
            raise ValueError(f"Weight alpha must be finite, got {self.alpha}!")

    @property
    def beta(self) -> float:
        return 1 - self.alpha


@dataclass(frozen=True)
class Sim2Xi:
    """Chord lengths xi1, xi2, xi3 (right to left) and the bends xi4, xi5"""

    xi1: numeric.Real
    xi2: numeric.Real
    xi3: numeric.Real
    xi4: numeric.Real
    xi5: numeric.Real

    def values(self) -> tuple[numeric.Real, ...]:
        return self.xi1, self.xi2, self.xi3, self.xi4, self.xi5


def sim2_xi(s: Stencil4) -> Sim2Xi:
    """The five euclidean invariants of a stencil"""
    (_, y0), (_, y1), (_, y2), (_, y3) = s
    h0, h1, h2 = s.spacings
    return Sim2Xi(
        numeric.sqrt(h2 * h2 + (y3 - y2) ** 2),
        numeric.sqrt(h1 * h1 + (y2 - y1) ** 2),
        numeric.sqrt(h0 * h0 + (y1 - y0) ** 2),
        (y3 - y2) * h1 - (y2 - y1) * h2,
        (y2 - y1) * h0 - (y1 - y0) * h1,
    )


def sim2_quotients(xi: Sim2Xi) -> tuple[numeric.Real, numeric.Real]:
    """Right and left bend quotients, both tend to y''/(2 (1 + y'^2)^(3/2))"""
    right = xi.xi4 / (xi.xi1 * xi.xi2 * (xi.xi1 + xi.xi2))
    left = xi.xi5 / (xi.xi2 * xi.xi3 * (xi.xi2 + xi.xi3))
    return right, left


def sim2_j(s: Stencil4, w: AlphaWeight = AlphaWeight()) -> tuple[numeric.Real, numeric.Real]:
    """Discrete curvature J1 and curvature rate J2"""
    xi = sim2_xi(s)
    right, left = sim2_quotients(xi)
    j1 = 2 * w.alpha * right + 2 * w.beta * left
    j2 = 6 / (xi.xi1 + xi.xi2 + xi.xi3) * (right - left)
    return j1, j2
