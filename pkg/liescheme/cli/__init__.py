"""Command line interface: experiment configuration, commands and invariance suites"""

from .app import SchemeApp, main
from .config import ExperimentConfig
from .suites import SuiteResult, run_suites
