"""Finite symmetry transformations and their prolonged actions"""

from .element import GroupElement, apply, apply_stencil, transform_jet, sample_transform_jet
from .flows import FLOW_LIMITS, FLOWS, SCALING_GENERATORS
