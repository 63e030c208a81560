"""Contains the invariant third order ODEs, their residuals and solved forms"""

# Standard modules
from dataclasses import dataclass, field

# Local modules
from ..constants import AlgebraId
from ..core import numeric
from ..core.errors import DegenerateJet, DomainViolation
from ..core.jet import Jet3
from ..invariants.continuous import schwarzian


FORCING_KINDS = ("sin", "zero", "const")


@dataclass(frozen=True)
class Forcing:
    """Right hand side F(x) of the Schwarzian equation"""

    kind: str = "sin"
    value: float = 0.0

    def __post_init__(self) -> None:
        if self.kind not in FORCING_KINDS:
            raise ValueError(f"Unknown forcing '{self.kind}', expected one of {FORCING_KINDS}!")
        if not numeric.isfinite(self.value):
            raise ValueError(f"Forcing value must be finite, got {self.value}!")

    @classmethod
    def const(cls, value: float) -> "Forcing":
        return cls("const", value)

    # PROPERTIES

    @property
    def constant(self) -> bool:
        """Constant forcing admits the x translation as an extra symmetry"""
        return self.kind != "sin"

    # METHODS

    def derivative(self, x: numeric.Real) -> numeric.Real:
        return numeric.cos(x) if self.kind == "sin" else 0 * x

    # OVERLOADS

    def __call__(self, x: numeric.Real) -> numeric.Real:
        if self.kind == "sin":
            return numeric.sin(x)
        if self.kind == "zero":
            return 0 * x
        return self.value + 0 * x


@dataclass(frozen=True)
class OdeSpec:
    """One of the three invariant ODEs with its parameters

    SIM2: (1 + y'^2) y''' - 3 y' y''^2 = K y''^2
    SL2Y: (y' y''' - 3/2 y''^2) / y'^2 = F(x)
    GL2XY: I2 = branch |A| I1^(3/2), the signed square root of I2^2 = A^2 I1^3
    """

    algebra: AlgebraId
    k: float = 0.0
    forcing: Forcing = field(default_factory=Forcing)
    a: float = -1.0
    branch: int = -1

    def __post_init__(self) -> None:
        object.__setattr__(self, "algebra", AlgebraId(self.algebra))
        if not (numeric.isfinite(self.k) and numeric.isfinite(self.a)):
            raise ValueError(f"ODE parameters must be finite, got K={self.k}, A={self.a}!")
        if self.branch not in (-1, 1):
            raise ValueError(f"Branch sign must be -1 or 1, got {self.branch}!")

    @classmethod
    def sim2(cls, k: float = 0.0) -> "OdeSpec":
        return cls(AlgebraId.SIM2, k=k)

    @classmethod
    def sl2y(cls, forcing: Forcing = Forcing()) -> "OdeSpec":
        return cls(AlgebraId.SL2Y, forcing=forcing)

    @classmethod
    def gl2xy(cls, a: float = -1.0, branch: int = -1) -> "OdeSpec":
        return cls(AlgebraId.GL2XY, a=a, branch=branch)

    # PROPERTIES

    @property
    def amplitude(self) -> float:
        """Signed amplitude branch |A| of the GL(2) equation"""
        return self.branch * abs(self.a)


@dataclass(frozen=True)
class InitialData:
    """Position and derivatives through second order at x0"""

    x0: float
    y0: float
    y1: float
    y2: float

    def jet(self, spec: OdeSpec) -> Jet3:
        """The on-solution jet, y''' from the ODE"""
        return Jet3(self.x0, self.y0, self.y1, self.y2, rhs(spec, self.x0, self.y0, self.y1, self.y2))


def _gl2_i1(x: numeric.Real, y1: numeric.Real, y2: numeric.Real) -> numeric.Real:
    i1 = (2 * x * y2 + y1) / y1 ** 3
    if i1 < 0:
        raise DomainViolation(f"GL(2) equation needs I1 >= 0, got {i1}!")
    return i1


def residual(spec: OdeSpec, j: Jet3) -> numeric.Real:
    """Left minus right hand side of the ODE"""
    if spec.algebra is AlgebraId.SIM2:
        return (1 + j.y1 ** 2) * j.y3 - 3 * j.y1 * j.y2 ** 2 - spec.k * j.y2 ** 2
    if spec.algebra is AlgebraId.SL2Y:
        return schwarzian(j) - spec.forcing(j.x)
    if j.x == 0 or j.y1 == 0:
        raise DegenerateJet("The GL(2) equation needs x != 0 and y' != 0!")
    i2 = j.x ** 2 * (j.y1 * j.y3 - 3 * j.y2 ** 2) / j.y1 ** 5
    return i2 - spec.amplitude * numeric.power_3_2(_gl2_i1(j.x, j.y1, j.y2))


def quadratic_residual(spec: OdeSpec, j: Jet3) -> numeric.Real:
    """Polynomial form x^4 (y' y''' - 3 y''^2)^2 - A^2 y' (2 x y'' + y')^3 of the GL(2) equation"""
    return j.x ** 4 * (j.y1 * j.y3 - 3 * j.y2 ** 2) ** 2 - spec.a ** 2 * j.y1 * (2 * j.x * j.y2 + j.y1) ** 3


def rhs(spec: OdeSpec, x: numeric.Real, y: numeric.Real, y1: numeric.Real, y2: numeric.Real) -> numeric.Real:
    """The y''' making the residual vanish on the chosen branch"""
    if spec.algebra is AlgebraId.SIM2:
        return (3 * y1 + spec.k) * y2 ** 2 / (1 + y1 ** 2)
    if spec.algebra is AlgebraId.SL2Y:
        if y1 == 0:
            raise DomainViolation("Schwarzian equation needs y' != 0!")
        return (spec.forcing(x) * y1 ** 2 + 1.5 * y2 ** 2) / y1
    if not (x > 0 and y1 > 0):
        raise DomainViolation(f"GL(2) equation needs x > 0 and y' > 0, got x={x}, y'={y1}!")
    i1 = _gl2_i1(x, y1, y2)
    return (3 * y2 ** 2 + spec.amplitude * y1 ** 5 * numeric.power_3_2(i1) / x ** 2) / y1
