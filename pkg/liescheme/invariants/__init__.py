"""Continuous and discrete invariants of the three symmetry groups"""

from .continuous import continuous_invariants, gl2_invariants, schwarzian, sim2_invariants
from .gl2 import Gl2Xi, gl2_brackets, gl2_defects, gl2_j, gl2_xi
from .sim2 import AlphaWeight, Sim2Xi, sim2_j, sim2_quotients, sim2_xi
from .sl2 import sl2_cross_ratio, sl2_j1, spacing_cross_ratio, spacing_weight
