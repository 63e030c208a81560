"""One-step advancement of the four point schemes and trajectory runs"""

# Standard modules
import dataclasses
from dataclasses import dataclass
from logging import Logger
from typing import Optional

# External modules
import numpy as np

# Local modules
from ..constants import BLOWUP_LIMIT, SEED_TOLERANCE, SchemeKind
from ..core import newton
from ..core import numeric
from ..core.errors import BlowUp, DegenerateStencil, DomainViolation, InvalidSpacing, LieSchemeError
from ..core.newton import NewtonReport
from ..core.point import Point
from ..core.stencil import divided_differences
from ..odes.reference import reference_solve
from ..odes.spec import InitialData, OdeSpec, rhs
from ..invariants.sl2 import spacing_cross_ratio, spacing_weight
from .equations import scaled_residuals
from .spec import SchemeSpec, StepState


@dataclass(frozen=True)
class RunResult:
    """Trajectory of a run, halted at halt_index when error is set"""

    points: tuple[Point, ...]
    reports: tuple[NewtonReport, ...]
    error: Optional[LieSchemeError] = None
    halt_index: Optional[int] = None

    # PROPERTIES

    @property
    def completed(self) -> bool:
        return self.error is None

    @property
    def xs(self) -> list[float]:
        return [p.x for p in self.points]

    @property
    def ys(self) -> list[float]:
        return [p.y for p in self.points]

    # METHODS

    def raise_error(self) -> None:
        """Raise the error that halted the run, if any"""
        if self.error is not None:
            raise self.error


def measured_gamma(st: StepState) -> float:
    """Ratio of the last two GL(2) chord invariants of a state"""
    (x0, y0), (x1, y1), (x2, y2) = st.points
    if not x0 > 0:
        raise DomainViolation(f"GL(2) scheme needs positive abscissas, got {x0}!")
    if y1 == y0:
        raise DegenerateStencil("GL(2) chord ratio undefined for repeated ordinates!")
    return (y2 - y1) / numeric.sqrt(x1 * x2) / ((y1 - y0) / numeric.sqrt(x0 * x1))


def _extrapolate(st: StepState) -> tuple[float, float]:
    """Quadratic extrapolation in the step index, pushed right of x_{n+1} when needed"""
    p0, p1, p2 = st.points
    x = p0.x - 3 * p1.x + 3 * p2.x
    y = p0.y - 3 * p1.y + 3 * p2.y
    if not x > p2.x:
        h = p2.x - p1.x
        x, y = p2.x + h, p2.y + (p2.y - p1.y)
    return x, y


def _step_sl2(spec: SchemeSpec, st: StepState) -> tuple[Point, NewtonReport]:
    (x0, y0), (x1, y1), (x2, y2) = st.points
    h0, h1 = st.spacings
    h2 = spec.lattice.next_spacing(h1)
    forcing = spec.ode.forcing(x1 + spec.a * h0 + spec.b * h1 + spec.c * h2)
    target = spacing_cross_ratio(h0, h1, h2) - forcing / spacing_weight(h0, h1, h2)
    if y2 == y0:
        raise DegenerateStencil("Cross-ratio step undefined for y_{n+1} = y_{n-1}!")
    k = target * (y1 - y0) / (y2 - y0)
    if k == 1:
        raise DegenerateStencil("Cross-ratio step has no finite solution!")
    point = Point(x2 + h2, (y1 - k * y2) / (1 - k))
    difference, lattice = scaled_residuals(spec, st.stencil(point))
    norm = float(max(abs(difference), abs(lattice)))
    return point, NewtonReport(1, norm, norm <= spec.newton_tol)


def _step_std(spec: SchemeSpec, st: StepState) -> tuple[Point, NewtonReport]:
    (x0, y0), (x1, y1), (x2, y2) = st.points
    h = spec.h if spec.h is not None else x2 - x1
    x3 = x2 + h
    _, d1, d2 = divided_differences((x0, x1, x2), (y0, y1, y2))
    third = rhs(spec.ode, x1, y1, d1, 2 * d2) / 6
    upper = d2 + third * (x3 - x0)
    slope = (y2 - y1) / (x2 - x1) + upper * (x3 - x1)
    point = Point(x3, y2 + slope * (x3 - x2))
    difference, lattice = scaled_residuals(spec, st.stencil(point))
    norm = float(max(abs(difference), abs(lattice)))
    return point, NewtonReport(1, norm, norm <= spec.newton_tol)


def _step_newton(spec: SchemeSpec, st: StepState, logger: Logger = None) -> tuple[Point, NewtonReport]:
    gamma = None
    if spec.kind is SchemeKind.INV_GL2:
        gamma = spec.gamma if spec.gamma is not None else measured_gamma(st)
        _, y1, y2 = (p.y for p in st.points)
        if not y2 > y1:
            raise DomainViolation("GL(2) scheme needs increasing ordinates!")

    def equations(v: np.ndarray) -> tuple:
        return scaled_residuals(spec, st.stencil(Point(v[0], v[1])), gamma)

    h = st.spacings[1]
    scale = (h, max(abs(st.points[2].y - st.points[1].y), h))
    solution, report = newton.solve(equations, _extrapolate(st), tol=spec.newton_tol, max_iter=spec.max_iter,
                                    scale=scale, logger=logger)
    return Point(float(solution[0]), float(solution[1])), report


def step(spec: SchemeSpec, st: StepState, logger: Logger = None) -> tuple[Point, NewtonReport]:
    """Solve the scheme's lattice and difference equations for (x_{n+2}, y_{n+2})"""
    if spec.kind is SchemeKind.INV_SL2:
        return _step_sl2(spec, st)
    if spec.kind is SchemeKind.STD:
        return _step_std(spec, st)
    return _step_newton(spec, st, logger)


def run(spec: SchemeSpec, seed: StepState, n_steps: int, logger: Logger = None) -> RunResult:
    """Iterate step from a seed, halting on the first error with the partial trajectory

    spec: the scheme
    seed: the three starting points
    n_steps: number of new points to compute
    logger: the logger to log information and warnings
    """

    if spec.kind is SchemeKind.INV_GL2 and spec.gamma is None:
        spec = dataclasses.replace(spec, gamma=measured_gamma(seed))
        if logger:
            logger.info(f"Measured lattice ratio gamma={spec.gamma:.17g} from the seed ...")

    points, reports = list(seed.points), []
    state = seed
    for index in range(n_steps):
        try:
            point, report = step(spec, state, logger)
            if max(abs(point.x), abs(point.y)) > BLOWUP_LIMIT:
                raise BlowUp(f"Run exceeds {BLOWUP_LIMIT:g} at x={point.x}!", point.x)
            state = state.advance(point)
        except LieSchemeError as error:
            error.halt_index = index
            if logger:
                logger.warning(f"Run halted at step {index}: {error} ...")
            return RunResult(tuple(points), tuple(reports), error, index)
        points.append(point)
        reports.append(report)

    if logger:
        logger.info(f"Run of {spec.kind.value} completed {n_steps} steps ...")
    return RunResult(tuple(points), tuple(reports))


def seed_from_initial_data(spec: SchemeSpec, ode: OdeSpec, init: InitialData, eps: float,
                           logger: Logger = None) -> StepState:
    """Three starting points at x0 - eps, x0 and x0 + eps from the reference integrator"""
    if not eps > 0:
        raise InvalidSpacing(f"Invalid spacing eps={eps}, must be positive!")
    if spec.invariant and spec.algebra is not ode.algebra:
        raise ValueError(f"Scheme {spec.kind.value} cannot be seeded from a {ode.algebra.value} equation!")
    left = reference_solve(ode, init, init.x0 - eps, SEED_TOLERANCE, logger)[-1]
    right = reference_solve(ode, init, init.x0 + eps, SEED_TOLERANCE, logger)[-1]
    return StepState((Point(left.x, left.y), Point(init.x0, init.y0), Point(right.x, right.y)))
