"""Geometric primitives: points, stencils, jets and the Newton kernel"""

from .errors import *
from .jet import Jet3
from .point import Point
from .series import Series
from .stencil import SpacingDirection, Stencil4, stencil_from_jet, discrete_derivatives, divided_differences
from .newton import NewtonReport
from . import newton
