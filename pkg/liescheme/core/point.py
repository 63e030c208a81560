"""Contains the plane point class"""

# Local modules
from . import numeric
from .errors import DomainViolation


class Point(tuple):
    """Plane point (x, y) with finite coordinates"""

    def __new__(cls, x: numeric.Real, y: numeric.Real) -> "Point":
        if not (numeric.isfinite(x) and numeric.isfinite(y)):
            raise DomainViolation(f"Point coordinates must be finite, got ({x}, {y})!")
        return tuple.__new__(cls, (x, y))

    # PROPERTIES

    @property
    def x(self) -> numeric.Real:
        return self[0]

    @property
    def y(self) -> numeric.Real:
        return self[1]

    # METHODS

    def as_float(self) -> "Point":
        """Convert the coordinates to floats"""
        return Point(float(self[0]), float(self[1]))

    # OVERLOADS

    def __repr__(self) -> str:
        return f"Point[x={self[0]}, y={self[1]}]"

    def __str__(self) -> str:
        return f"({self[0]}, {self[1]})"
