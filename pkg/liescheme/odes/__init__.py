"""Invariant ODEs, reference integration and high precision solution curves"""

from .curve import SolutionCurve
from .reference import reference_solve, reference_track, reference_values, rk4_integrate
from .spec import FORCING_KINDS, Forcing, InitialData, OdeSpec, quadratic_residual, residual, rhs
