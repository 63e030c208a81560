"""Elementary functions working on floats and mpmath numbers alike"""

# Standard modules
import math
from typing import Union

# External modules
import mpmath


Real = Union[float, mpmath.mpf]


def is_mp(value) -> bool:
    """Check for an mpmath number"""
    return isinstance(value, (mpmath.mpf, mpmath.mpc))


def sqrt(value: Real) -> Real:
    """Square root of a non-negative number"""
    return mpmath.sqrt(value) if is_mp(value) else math.sqrt(value)


def exp(value: Real) -> Real:
    """Exponential function"""
    return mpmath.exp(value) if is_mp(value) else math.exp(value)


def sin(value: Real) -> Real:
    """Sine function"""
    return mpmath.sin(value) if is_mp(value) else math.sin(value)


def cos(value: Real) -> Real:
    """Cosine function"""
    return mpmath.cos(value) if is_mp(value) else math.cos(value)


def isfinite(value: Real) -> bool:
    """Check for a finite number"""
    return bool(mpmath.isfinite(value)) if is_mp(value) else math.isfinite(value)


def power_3_2(value: Real) -> Real:
    """The power 3/2 of a non-negative number"""
    return value * sqrt(value)
