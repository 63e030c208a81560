# Enum
from enum import Enum


# Credits
VERSION = "0.1.0"
AUTHOR = "Nikocraft"

# Tolerances
SINGULAR_TOLERANCE = 1e-12
NEWTON_TOLERANCE = 1e-12
NEWTON_MAX_ITERATIONS = 50
NEWTON_MAX_HALVINGS = 20
JACOBIAN_PERTURBATION = 1e-7
FIT_CONDITION_LIMIT = 1e12
INVARIANCE_TOLERANCE = 1e-6
DEFECT_FLOOR = 1e-8
INVARIANCE_ORDER_SLACK = 0.5
INVARIANCE_LEVELS = 3
ON_SOLUTION_TOLERANCE = 1e-10
GAP_FLOOR = 1e-9

# Reference integration
BLOWUP_LIMIT = 1e12
MIN_STEP = 1e-14
REFERENCE_INITIAL_STEP = 0.1
REFERENCE_MAX_STEPS = 2 ** 20
REFERENCE_STALL_LEVELS = 3
SEED_TOLERANCE = 1e-13

# High precision sampling
CURVE_DPS = 30
DEFAULT_EPS0 = 0.02

# Scheme defaults
DEFAULT_ALPHA = 0.5
ORDER_RAISING_ABC = (-0.25, 0.5, 0.25)

# Exit codes
EXIT_SUCCESS = 0
EXIT_CONFIG_ERROR = 1
EXIT_HALTED = 2


# Lie algebra realization
class AlgebraId(str, Enum):

    SIM2 = "SIM2"
    SL2Y = "SL2Y"
    GL2XY = "GL2XY"

    @property
    def dimension(self) -> int:
        return 3 if self is AlgebraId.SL2Y else 4


# Scheme kind
class SchemeKind(str, Enum):

    INV_SIM2 = "INV_SIM2"
    INV_SL2 = "INV_SL2"
    INV_GL2 = "INV_GL2"
    STD = "STD"


# Closed-form first differential approximation
class FirstApproxId(str, Enum):

    SIM2_LATTICE = "SIM2_LATTICE"
    SIM2_EQ = "SIM2_EQ"
    SL2_EQ = "SL2_EQ"
    GL2_LATTICE = "GL2_LATTICE"
    GL2_EQ = "GL2_EQ"


# Experiment kind
class Experiment(str, Enum):

    SOLVE = "solve"
    COMPARE = "compare"
    DIFFAPPROX = "diffapprox"
    INVARIANCE = "invariance"
