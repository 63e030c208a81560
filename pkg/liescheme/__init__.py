"""Lie symmetry invariant difference schemes for third order ODEs"""

# Modules
from .utils import time
from .utils import file
from .utils import log

# Classes
from .app import App
from .utils.config import Config
from .core import Jet3, Point, SpacingDirection, Stencil4, stencil_from_jet
from .core.errors import LieSchemeError, ConfigError, InvalidSpacing
from .symmetry import GroupElement, apply_stencil, transform_jet
from .odes import Forcing, InitialData, OdeSpec, SolutionCurve, reference_solve
from .schemes import Lattice, SchemeSpec, StepState, run, seed_from_initial_data, step
from .diffapprox import (compare_closed_form, extract_expansion, first_approx_terms, check_first_approx_invariance,
                         refine_zero_set_invariance)
from .cli import ExperimentConfig, SchemeApp, main

# Constants
from .constants import AUTHOR, VERSION, AlgebraId, SchemeKind, FirstApproxId, Experiment

__all__ = [
    "time",
    "file",
    "log",
    "App",
    "Config",
    "Jet3",
    "Point",
    "SpacingDirection",
    "Stencil4",
    "stencil_from_jet",
    "LieSchemeError",
    "ConfigError",
    "InvalidSpacing",
    "GroupElement",
    "apply_stencil",
    "transform_jet",
    "Forcing",
    "InitialData",
    "OdeSpec",
    "SolutionCurve",
    "reference_solve",
    "Lattice",
    "SchemeSpec",
    "StepState",
    "run",
    "seed_from_initial_data",
    "step",
    "compare_closed_form",
    "extract_expansion",
    "first_approx_terms",
    "check_first_approx_invariance",
    "refine_zero_set_invariance",
    "ExperimentConfig",
    "SchemeApp",
    "main",
    "AUTHOR",
    "VERSION",
    "AlgebraId",
    "SchemeKind",
    "FirstApproxId",
    "Experiment",
]
