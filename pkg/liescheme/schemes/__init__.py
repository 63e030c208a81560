"""Four point difference schemes: invariant schemes and the standard baseline"""

from ..core.newton import NewtonReport
from .equations import scaled_residuals, scheme_residuals
from .spec import LATTICE_KINDS, Lattice, SchemeSpec, StepState
from .stepper import RunResult, measured_gamma, run, seed_from_initial_data, step
