"""Contains the truncated power series class"""

# Standard modules
import math
from typing import Iterable, Union

# Local modules
from . import numeric


Scalar = Union[int, float]


class Series(tuple):
    """Truncated power series c0 + c1 t + ... + cN t^N in an offset t"""

    def __new__(cls, coefficients: Iterable[numeric.Real]) -> "Series":
        return tuple.__new__(cls, tuple(coefficients))

    @classmethod
    def constant(cls, value: numeric.Real, order: int) -> "Series":
        """Series of a constant"""
        return cls([value] + [0.0] * order)

    @classmethod
    def variable(cls, value: numeric.Real, order: int) -> "Series":
        """Series of the variable value + t"""
        return cls([value, 1.0] + [0.0] * (order - 1))

    # PROPERTIES

    @property
    def order(self) -> int:
        return len(self) - 1

    @property
    def value(self) -> numeric.Real:
        return self[0]

    # METHODS

    def derivatives(self) -> tuple[numeric.Real, ...]:
        """Derivatives with respect to t at t = 0"""
        return tuple(c * math.factorial(k) for k, c in enumerate(self))

    def evaluate(self, t: numeric.Real) -> numeric.Real:
        """Evaluate the truncated polynomial at offset t"""
        result = 0.0
        for c in reversed(self):
            result = result * t + c
        return result

    def reciprocal(self) -> "Series":
        """Multiplicative inverse, the constant term must not vanish"""
        if self[0] == 0:
            raise ZeroDivisionError("Series with zero constant term has no reciprocal!")
        inverse = [1.0 / self[0]]
        for k in range(1, len(self)):
            inverse.append(-sum(self[j] * inverse[k - j] for j in range(1, k + 1)) / self[0])
        return Series(inverse)

    def _coerce(self, other: Union["Series", Scalar]) -> "Series":
        if isinstance(other, Series):
            if len(other) != len(self):
                raise ValueError(f"Cannot combine series of order {self.order} and {other.order}!")
            return other
        return Series.constant(other, self.order)

    # OVERLOADS

    def __add__(self, other: Union["Series", Scalar]) -> "Series":
        other = self._coerce(other)
        return Series(a + b for a, b in zip(self, other))

    def __radd__(self, other: Scalar) -> "Series":
        return self.__add__(other)

    def __sub__(self, other: Union["Series", Scalar]) -> "Series":
        other = self._coerce(other)
        return Series(a - b for a, b in zip(self, other))

    def __rsub__(self, other: Scalar) -> "Series":
        return self._coerce(other).__sub__(self)

    def __mul__(self, other: Union["Series", Scalar]) -> "Series":
        if not isinstance(other, Series):
            return Series(a * other for a in self)
        other = self._coerce(other)
        return Series(sum(self[j] * other[k - j] for j in range(k + 1)) for k in range(len(self)))

    def __rmul__(self, other: Scalar) -> "Series":
        return self.__mul__(other)

    def __truediv__(self, other: Union["Series", Scalar]) -> "Series":
        if not isinstance(other, Series):
            return Series(a / other for a in self)
        return self.__mul__(self._coerce(other).reciprocal())

    def __rtruediv__(self, other: Scalar) -> "Series":
        return self.reciprocal().__mul__(other)

    def __neg__(self) -> "Series":
        return Series(-a for a in self)

    def __pos__(self) -> "Series":
        return self

    def __repr__(self) -> str:
        return f"Series[{', '.join(str(c) for c in self)}]"
