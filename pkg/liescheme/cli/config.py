"""Contains the experiment configuration"""

# Standard modules
import hashlib
import json
from dataclasses import dataclass
from logging import Logger
from typing import Any, Optional

# Local modules
from ..constants import DEFAULT_EPS0, AlgebraId, Experiment, FirstApproxId, SchemeKind
from ..core.errors import ConfigError, InvalidSpacing
from ..core.stencil import SpacingDirection
from ..diffapprox.closed_forms import FIRST_APPROX_SCHEME, approx_orders
from ..odes.spec import Forcing, InitialData, OdeSpec
from ..schemes.spec import SCHEME_ALGEBRA, Lattice, SchemeSpec
from ..utils.config import Config


SUITES = ("invariants", "schemes", "diffapprox")

SECTION_KEYS = {
    "ode": {"algebra", "k", "forcing", "forcing_value", "a", "branch"},
    "scheme": {"kind", "alpha", "a", "b", "c", "gamma", "lattice", "lattice_ratio", "h", "newton_tol", "max_iter"},
    "baseline": {"kind", "alpha", "a", "b", "c", "gamma", "lattice", "lattice_ratio", "h", "newton_tol", "max_iter"},
    "initial": {"x0", "y0", "y1", "y2"},
    "approx": {"id", "direction", "eps0", "levels", "degree"},
    "invariance": {"elements", "suites", "algebras", "generators"},
}

# Initial data on y'' = 1/2 at the origin, the Moebius curve (2x + 1)/(x + 3) and a GL(2) curve through (1, 0)
DEFAULT_INITIAL: dict[AlgebraId, dict[str, float]] = {
    AlgebraId.SIM2: {"x0": 0.0, "y0": 0.0, "y1": 0.0, "y2": 0.5},
    AlgebraId.SL2Y: {"x0": 0.0, "y0": 1 / 3, "y1": 5 / 9, "y2": -10 / 27},
    AlgebraId.GL2XY: {"x0": 1.0, "y0": 0.0, "y1": 1.0, "y2": 0.25},
}

DEFAULT_SCHEME: dict[AlgebraId, SchemeKind] = {algebra: kind for kind, algebra in SCHEME_ALGEBRA.items()}

DEFAULT_APPROX: dict[AlgebraId, FirstApproxId] = {
    AlgebraId.SIM2: FirstApproxId.SIM2_EQ,
    AlgebraId.SL2Y: FirstApproxId.SL2_EQ,
    AlgebraId.GL2XY: FirstApproxId.GL2_EQ,
}


@dataclass(frozen=True)
class ApproxSettings:
    """Settings of a residual expansion experiment"""

    approx: FirstApproxId
    direction: SpacingDirection
    eps0: float
    levels: int
    degree: int


@dataclass(frozen=True)
class InvarianceSettings:
    """Settings of the invariance suites"""

    elements: int
    suites: tuple[str, ...]
    algebras: tuple[AlgebraId, ...]
    generators: Optional[tuple[int, ...]]


def _name(section: str, key: str) -> str:
    return f"{section}.{key}" if section else key


def _number(section: str, key: str, value: Any) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"'{_name(section, key)}' must be a number, got {value!r}!")
    return float(value)


def _integer(section: str, key: str, value: Any, minimum: int = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise ConfigError(f"'{_name(section, key)}' must be an integer >= {minimum}, got {value!r}!")
    return value


class ExperimentConfig(Config):
    """Configuration of one experiment, loaded strictly from a JSON file"""

    def __init__(self, path: str = None, logger: Logger = None) -> None:

        super().__init__(path, logger)

        # Attributes
        self.experiment: Optional[Experiment] = None
        self.ode: dict = {"algebra": AlgebraId.SIM2.value}
        self.scheme: dict = {}
        self.baseline: dict = {"kind": SchemeKind.STD.value}
        self.initial: dict = {}
        self.eps: float = 0.02
        self.steps: int = 25
        self.reference_tol: float = 1e-12
        self.approx: dict = {}
        self.invariance: dict = {}
        self.seed: int = 0
        self.output: Optional[str] = None

    @classmethod
    def from_dict(cls, data: dict, logger: Logger = None) -> "ExperimentConfig":
        """Build a configuration from a dictionary with the same checks as loading"""
        config = cls(None, logger)
        config.decode(data)
        return config

    # PROPERTIES

    @property
    def algebra(self) -> AlgebraId:
        return AlgebraId(self.ode.get("algebra", AlgebraId.SIM2.value))

    # METHODS

    def override(self, seed: Optional[int] = None, output: Optional[str] = None) -> None:
        """Apply command line overrides"""
        if seed is not None:
            self.seed = _integer("", "seed", seed)
        if output is not None:
            self.output = output

    def digest(self) -> str:
        """SHA-256 of the canonical JSON of the effective configuration, the output path left out"""
        data = self.encode()
        data.pop("output", None)
        canonical = json.dumps(data, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    def output_path(self, extension: str) -> str:
        return self.output if self.output else f"{self.experiment.value}.{extension}"

    def build_ode(self) -> OdeSpec:
        ode = self.ode
        try:
            forcing = Forcing(ode.get("forcing", "sin"), _number("ode", "forcing_value", ode.get("forcing_value", 0.0)))
            return OdeSpec(self.algebra, k=_number("ode", "k", ode.get("k", 0.0)), forcing=forcing,
                           a=_number("ode", "a", ode.get("a", -1.0)), branch=ode.get("branch", -1))
        except ValueError as error:
            raise ConfigError(f"Invalid 'ode' section: {error}") from error

    def _build(self, section: str, block: dict) -> SchemeSpec:
        arguments = {"kind": block.get("kind", DEFAULT_SCHEME[self.algebra].value)}
        for key in ("alpha", "a", "b", "c", "gamma", "h", "newton_tol"):
            if block.get(key) is not None:
                arguments[key] = _number(section, key, block[key])
        if "max_iter" in block:
            arguments["max_iter"] = _integer(section, "max_iter", block["max_iter"], 1)
        ratio = _number(section, "lattice_ratio", block.get("lattice_ratio", 1.0))
        try:
            arguments["lattice"] = Lattice(block.get("lattice", "uniform"), ratio)
            return SchemeSpec(ode=self.build_ode(), **arguments)
        except InvalidSpacing:
            raise
        except ValueError as error:
            raise ConfigError(f"Invalid '{section}' section: {error}") from error

    def build_scheme(self) -> SchemeSpec:
        return self._build("scheme", self.scheme)

    def build_baseline(self) -> SchemeSpec:
        return self._build("baseline", self.baseline)

    def initial_data(self) -> InitialData:
        values = {**DEFAULT_INITIAL[self.algebra], **self.initial}
        return InitialData(**{key: _number("initial", key, value) for key, value in values.items()})

    def approx_settings(self) -> ApproxSettings:
        approx = self.approx
        try:
            approx_id = FirstApproxId(approx.get("id", DEFAULT_APPROX[self.algebra].value))
        except ValueError as error:
            raise ConfigError(f"Invalid 'approx.id': {error}") from error
        if FIRST_APPROX_SCHEME[approx_id] is not self.build_scheme().kind:
            raise ConfigError(f"'{approx_id.value}' needs scheme {FIRST_APPROX_SCHEME[approx_id].value}!")
        direction = approx.get("direction", [1.0, 1.0, 1.0])
        if not isinstance(direction, list) or len(direction) != 3:
            raise ConfigError(f"'approx.direction' must be a list of three ratios, got {direction!r}!")
        direction = SpacingDirection(tuple(_number("approx", "direction", value) for value in direction))
        degree = _integer("approx", "degree", approx.get("degree", max(approx_orders(approx_id)) + 3), 2)
        levels = _integer("approx", "levels", approx.get("levels", degree + 4), 4)
        if levels <= degree:
            raise ConfigError(f"'approx.levels' must exceed the degree {degree}, got {levels}!")
        eps0 = _number("approx", "eps0", approx.get("eps0", DEFAULT_EPS0))
        if not eps0 > 0:
            raise InvalidSpacing(f"invalid spacing eps0={eps0}, must be positive!")
        return ApproxSettings(approx_id, direction, eps0, levels, degree)

    def invariance_settings(self) -> InvarianceSettings:
        invariance = self.invariance
        elements = _integer("invariance", "elements", invariance.get("elements", 100), 1)
        suites = invariance.get("suites", list(SUITES))
        if not isinstance(suites, list) or not suites or not set(suites) <= set(SUITES):
            raise ConfigError(f"'invariance.suites' must be a non-empty list out of {SUITES}, got {suites!r}!")
        try:
            algebras = tuple(AlgebraId(value) for value in invariance.get("algebras", [a.value for a in AlgebraId]))
        except ValueError as error:
            raise ConfigError(f"Invalid 'invariance.algebras': {error}") from error
        generators = invariance.get("generators")
        if generators is not None:
            if not isinstance(generators, list) or not generators:
                raise ConfigError(f"'invariance.generators' must be a non-empty list, got {generators!r}!")
            generators = tuple(_integer("invariance", "generators", value, 1) for value in generators)
            for algebra in algebras:
                if max(generators) > algebra.dimension:
                    raise ConfigError(f"{algebra.value} has no generator X{max(generators)}!")
        return InvarianceSettings(elements, tuple(suites), algebras, generators)

    def validate(self) -> None:
        """Build everything the experiment needs, raising ConfigError on the first problem"""
        if self.experiment is None:
            raise ConfigError("Missing required key 'experiment'!")
        if not self.eps > 0:
            raise InvalidSpacing(f"invalid spacing eps={self.eps}, must be positive!")
        if self.experiment is Experiment.INVARIANCE:
            self.invariance_settings()
            return
        self.build_scheme()
        self.initial_data()
        if self.experiment is Experiment.COMPARE:
            self.build_baseline()
        if self.experiment is Experiment.DIFFAPPROX:
            self.approx_settings()

    # ABSTRACT METHODS

    def load_attribute(self, attribute: str, data: dict) -> Any | None:
        if attribute == "experiment":
            try:
                return Experiment(data.get("experiment"))
            except ValueError as error:
                raise ConfigError(f"Invalid 'experiment': {error}") from error
        if attribute not in data:
            return None
        value = data[attribute]
        if attribute in SECTION_KEYS:
            if not isinstance(value, dict):
                raise ConfigError(f"'{attribute}' must be an object, got {value!r}!")
            unknown = set(value) - SECTION_KEYS[attribute]
            if unknown:
                raise ConfigError(f"Unknown keys in '{attribute}': {sorted(unknown)}!")
            if attribute == "ode" and value.get("algebra", AlgebraId.SIM2.value) not in [a.value for a in AlgebraId]:
                raise ConfigError(f"Unknown algebra {value.get('algebra')!r}, expected one of {[a.value for a in AlgebraId]}!")
            return dict(value)
        if attribute in ("eps", "reference_tol"):
            return _number("", attribute, value)
        if attribute in ("steps", "seed"):
            return _integer("", attribute, value)
        if attribute == "output" and not isinstance(value, str):
            raise ConfigError(f"'output' must be a path string, got {value!r}!")
        return None

    def save_attribute(self, attribute: str, value: Any, data: dict) -> Any | None:
        if attribute == "experiment":
            data[attribute] = value.value if value is not None else None
            return True
        return None

    def load_extras(self, data: dict) -> None:
        unknown = set(data) - set(self.attributes)
        if unknown:
            raise ConfigError(f"Unknown configuration keys: {sorted(unknown)}!")
        self.validate()
