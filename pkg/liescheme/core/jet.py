"""Contains the third order jet class"""

# Standard modules
from dataclasses import dataclass

# Local modules
from . import numeric
from .errors import DomainViolation
from .series import Series


@dataclass(frozen=True)
class Jet3:
    """Jet (x, y, y', y'', y''') of a curve at one point"""

    x: numeric.Real
    y: numeric.Real
    y1: numeric.Real
    y2: numeric.Real
    y3: numeric.Real

    def __post_init__(self) -> None:
        for name in ("x", "y", "y1", "y2", "y3"):
            if not numeric.isfinite(getattr(self, name)):
                raise DomainViolation(f"Jet entry '{name}' must be finite, got {getattr(self, name)}!")

    # METHODS

    def taylor(self, x: numeric.Real) -> numeric.Real:
        """Evaluate the cubic Taylor polynomial of the jet at an abscissa"""
        t = x - self.x
        return self.y + t * (self.y1 + t * (self.y2 / 2 + t * self.y3 / 6))

    def series(self) -> tuple[Series, Series]:
        """The Taylor representative as a pair of series (x + t, y(x + t))"""
        return Series.variable(self.x, 3), Series((self.y, self.y1, self.y2 / 2, self.y3 / 6))

    def as_float(self) -> "Jet3":
        """Convert all entries to floats"""
        return Jet3(float(self.x), float(self.y), float(self.y1), float(self.y2), float(self.y3))

    def values(self) -> tuple[numeric.Real, ...]:
        """All entries as a tuple"""
        return self.x, self.y, self.y1, self.y2, self.y3
