"""Differential approximations: expansion fits, closed forms and their invariance"""

from .closed_forms import (FIRST_APPROX_SCHEME, approx_orders, first_approx_terms, first_approx_value, leading_order,
                           normalization, residual_functional)
from .comparison import (ClosedFormComparison, OrderGap, compare_closed_form, relative_gap, value_scale,
                         zero_set_spacing)
from .expansion import ExpansionReport, extract_expansion
from .invariance import (InvarianceReport, ZeroSetRefinement, check_first_approx_invariance, expected_defect_order,
                         refine_zero_set_invariance)
