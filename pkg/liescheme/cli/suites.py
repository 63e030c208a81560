"""Invariance suites run by the invariance experiment

Every suite draws random group elements from a seeded generator and reports one
line per checked quantity with its worst deviation.
"""

# Standard modules
import dataclasses
import math
from dataclasses import dataclass, field
from logging import Logger
from typing import Callable, Optional

# External modules
import numpy as np

# Local modules
from ..constants import AlgebraId, FirstApproxId, SchemeKind
from ..core.errors import InvalidSpacing, LieSchemeError, NewtonDiverged
from ..core.jet import Jet3
from ..core.stencil import SpacingDirection, Stencil4, stencil_from_jet
from ..diffapprox.closed_forms import FIRST_APPROX_SCHEME, PRINTED_VARIANTS
from ..diffapprox.invariance import check_first_approx_invariance, expected_defect_order, refine_zero_set_invariance
from ..invariants.gl2 import gl2_j, gl2_xi
from ..invariants.sim2 import sim2_j, sim2_xi
from ..invariants.sl2 import sl2_cross_ratio, sl2_j1
from ..odes.spec import Forcing, InitialData, OdeSpec
from ..schemes.equations import scaled_residuals
from ..schemes.spec import SchemeSpec
from ..schemes.stepper import measured_gamma, run, seed_from_initial_data
from ..symmetry.element import GroupElement, apply_stencil
from ..symmetry.flows import SCALING_GENERATORS
from .config import DEFAULT_INITIAL, InvarianceSettings


# Deviation allowed for exact discrete invariance
EXACT_TOLERANCE = 1e-10

# Scaling weights of the discrete invariants under the dilation generators
WEIGHTS: dict[AlgebraId, dict[str, int]] = {
    AlgebraId.SIM2: {"xi1": 1, "xi2": 1, "xi3": 1, "xi4": 2, "xi5": 2, "J1": -1, "J2": -2},
    AlgebraId.SL2Y: {"R": 0, "J1": 0},
    AlgebraId.GL2XY: {"xi1": -1, "xi2": -1, "xi3": -1, "xi4": -1, "xi5": -1, "J1": 2, "J2": 3},
}

SUITE_ODES: dict[AlgebraId, OdeSpec] = {
    AlgebraId.SIM2: OdeSpec.sim2(1.0),
    AlgebraId.SL2Y: OdeSpec.sl2y(Forcing("sin")),
    AlgebraId.GL2XY: OdeSpec.gl2xy(-1.0),
}

SUITE_SCHEMES: dict[AlgebraId, SchemeKind] = {
    AlgebraId.SIM2: SchemeKind.INV_SIM2,
    AlgebraId.SL2Y: SchemeKind.INV_SL2,
    AlgebraId.GL2XY: SchemeKind.INV_GL2,
}

# Forcing evaluation point with a non-vanishing first order term of the Schwarzian scheme
SL2_SUITE_FORCING_POINT = (0.5, 0.25, 0.0)


@dataclass
class SuiteResult:
    """Outcome of one suite"""

    name: str
    checks: int = 0
    failures: int = 0
    skipped: int = 0
    lines: list[str] = field(default_factory=list)

    # PROPERTIES

    @property
    def passed(self) -> bool:
        return self.failures == 0

    # METHODS

    def record(self, passed: bool, count: int = 1) -> None:
        self.checks += count
        if not passed:
            self.failures += 1

    def skip(self) -> None:
        """Count a check that had nothing to test"""
        self.skipped += 1

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"[{verdict}] {self.name}: {self.checks} checks, {self.failures} failures, {self.skipped} skipped"


def random_jet(algebra: AlgebraId, rng: np.random.Generator) -> Jet3:
    """A random jet inside the domain of the algebra's invariants"""
    if algebra is AlgebraId.SIM2:
        return Jet3(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-0.5, 0.5), rng.uniform(0.5, 1.5),
                    rng.uniform(-1, 1))
    if algebra is AlgebraId.SL2Y:
        return Jet3(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(0.5, 1.5), rng.uniform(-0.5, 0.5),
                    rng.uniform(-1, 1))
    return Jet3(rng.uniform(1, 2), rng.uniform(-1, 1), rng.uniform(0.5, 1.5), rng.uniform(0, 0.5),
                rng.uniform(-1, 1))


def random_solution_jet(algebra: AlgebraId, ode: OdeSpec, rng: np.random.Generator) -> Jet3:
    """A random jet on a solution of the equation"""
    j = random_jet(algebra, rng)
    return InitialData(j.x, j.y, j.y1, j.y2).jet(ode)


def random_element(algebra: AlgebraId, rng: np.random.Generator, generators: Optional[tuple[int, ...]] = None,
                   ode: OdeSpec = None) -> GroupElement:
    """A random element of the equation's symmetry group, x translations only for constant forcing"""
    extended = algebra is AlgebraId.SL2Y and ode is not None and ode.forcing.constant
    return GroupElement.random(algebra, rng, generators, extended)


def _discrete_invariants(algebra: AlgebraId, s: Stencil4) -> dict[str, float]:
    if algebra is AlgebraId.SIM2:
        j1, j2 = sim2_j(s)
        xi = sim2_xi(s)
        return {"xi1": xi.xi1, "xi2": xi.xi2, "xi3": xi.xi3, "xi4": xi.xi4, "xi5": xi.xi5, "J1": j1, "J2": j2}
    if algebra is AlgebraId.SL2Y:
        return {"R": sl2_cross_ratio(s), "J1": sl2_j1(s)}
    j1, j2 = gl2_j(s)
    xi = gl2_xi(s)
    return {"xi1": xi.xi1, "xi2": xi.xi2, "xi3": xi.xi3, "xi4": xi.xi4, "xi5": xi.xi5, "J1": j1, "J2": j2}


def invariants_suite(settings: InvarianceSettings, rng: np.random.Generator) -> SuiteResult:
    """Discrete invariants are invariant, or scale with their weight under dilations"""
    result = SuiteResult("invariants")
    for algebra in settings.algebras:
        worst: dict[str, float] = {}
        measured: dict[str, list[float]] = {}
        scaling = SCALING_GENERATORS.get(algebra)
        for _ in range(settings.elements):
            g = random_element(algebra, rng, settings.generators)
            direction = SpacingDirection(tuple(rng.uniform(0.5, 1.5, 3)))
            s = stencil_from_jet(random_jet(algebra, rng), direction, 0.1)
            try:
                before, after = _discrete_invariants(algebra, s), _discrete_invariants(algebra, apply_stencil(g, s))
            except LieSchemeError as error:
                result.lines.append(f"{algebra.value}: {g} raised {error}")
                result.record(False)
                continue
            tau = g.parameter(scaling) if scaling else 0.0
            for name, value in before.items():
                weight = WEIGHTS[algebra][name]
                error = abs(after[name] - value * math.exp(weight * tau)) / max(abs(after[name]), abs(value), 1e-300)
                worst[name] = max(worst.get(name, 0.0), error)
                result.record(error <= EXACT_TOLERANCE)
                if abs(tau) > 1e-3 and value != 0 and after[name] != 0:
                    measured.setdefault(name, []).append(math.log(abs(after[name] / value)) / tau)

        for name, error in worst.items():
            weights = measured.get(name)
            if weights and WEIGHTS[algebra][name] != 0:
                kind = f"equivariant with weight {np.median(weights):+.6f}"
            else:
                kind = "invariant"
            result.lines.append(f"{algebra.value} {name}: {kind}, worst relative deviation {error:.3e}")
    return result


def _solved_state(algebra: AlgebraId) -> tuple[SchemeSpec, list[Stencil4]]:
    """An invariant scheme and stencils solving it, from a short run"""
    ode = SUITE_ODES[algebra]
    spec = SchemeSpec(SUITE_SCHEMES[algebra], ode)
    init = InitialData(**DEFAULT_INITIAL[algebra])
    seed = seed_from_initial_data(spec, ode, init, 0.02)
    if spec.kind is SchemeKind.INV_GL2:
        spec = dataclasses.replace(spec, gamma=measured_gamma(seed))
    trajectory = run(spec, seed, 5)
    trajectory.raise_error()
    points = trajectory.points
    return spec, [Stencil4(points[i:i + 4]) for i in range(len(points) - 3)]


def schemes_suite(settings: InvarianceSettings, rng: np.random.Generator) -> SuiteResult:
    """Transformed solutions of the invariant schemes still solve them"""
    result = SuiteResult("schemes")
    for algebra in settings.algebras:
        spec, stencils = _solved_state(algebra)
        limit = 10 * spec.newton_tol
        worst = 0.0
        for index in range(settings.elements):
            g = random_element(algebra, rng, settings.generators, spec.ode)
            s = stencils[index % len(stencils)]
            try:
                residuals = scaled_residuals(spec, apply_stencil(g, s))
            except LieSchemeError as error:
                result.lines.append(f"{spec.kind.value}: {g} raised {error}")
                result.record(False)
                continue
            error = max(abs(float(value)) for value in residuals)
            worst = max(worst, error)
            result.record(error <= limit)
        result.lines.append(f"{spec.kind.value}: worst transformed residual {worst:.3e} (limit {limit:.0e})")
    return result


def _approx_ids(algebra: AlgebraId) -> list[FirstApproxId]:
    return [approx for approx, kind in FIRST_APPROX_SCHEME.items() if kind is SUITE_SCHEMES[algebra]]


def _approx_scheme(algebra: AlgebraId) -> SchemeSpec:
    ode = SUITE_ODES[algebra]
    if algebra is AlgebraId.GL2XY:
        return SchemeSpec(SUITE_SCHEMES[algebra], ode, gamma=1.0)
    if algebra is AlgebraId.SL2Y:
        a, b, c = SL2_SUITE_FORCING_POINT
        return SchemeSpec(SUITE_SCHEMES[algebra], ode, a=a, b=b, c=c)
    return SchemeSpec(SUITE_SCHEMES[algebra], ode)


def _check_zero_sets(result: SuiteResult, settings: InvarianceSettings, rng: np.random.Generator,
                     spec: SchemeSpec, approx: FirstApproxId, printed: bool) -> None:
    """Record the refinement verdicts of one closed form, printed variants only reported"""
    algebra = spec.ode.algebra
    label = f"{approx.value} (printed)" if printed else approx.value
    counted = not (printed and approx in PRINTED_VARIANTS)
    kept, checked, skipped = 0, 0, 0
    slowest, ratios = math.inf, []
    for _ in range(settings.elements):
        g = random_element(algebra, rng, settings.generators, spec.ode)
        j = random_solution_jet(algebra, spec.ode, rng)
        h0, h1 = rng.uniform(0.5e-3, 1.5e-3, 2)
        try:
            refinement = refine_zero_set_invariance(approx, g, j, h0, h1, spec, printed)
            report = check_first_approx_invariance(approx, g, j, (h0, h1, h1), spec, printed)
        except (InvalidSpacing, NewtonDiverged):
            skipped += 1
            if counted:
                result.skip()
            continue
        except LieSchemeError as error:
            result.lines.append(f"{label}: {g} raised {error}")
            if counted:
                result.record(False)
            continue
        checked += 1
        kept += refinement.preserved
        slowest = min((slowest, *refinement.orders))
        if counted:
            result.record(refinement.preserved)
        if report.ratio is not None:
            ratios.append(report.ratio)

    order = f"slowest defect order {slowest:.2f}" if slowest < math.inf else "defects at the floor"
    spread = f", equivariance ratio in [{min(ratios):.6g}, {max(ratios):.6g}]" if ratios else ""
    note = "" if counted else " (reported only)"
    expected = expected_defect_order(approx)
    result.lines.append(f"{label}: zero set kept in {kept}/{checked}, {order} (expected {expected}),"
                        f" {skipped} without a positive zero{spread}{note}")


def diffapprox_suite(settings: InvarianceSettings, rng: np.random.Generator) -> SuiteResult:
    """Zero sets of the closed-form first differential approximations are preserved"""
    result = SuiteResult("diffapprox")
    for algebra in settings.algebras:
        spec = _approx_scheme(algebra)
        for printed in (False, True):
            for approx in _approx_ids(algebra):
                _check_zero_sets(result, settings, rng, spec, approx, printed)
    return result


SUITE_RUNNERS: dict[str, Callable[[InvarianceSettings, np.random.Generator], SuiteResult]] = {
    "invariants": invariants_suite,
    "schemes": schemes_suite,
    "diffapprox": diffapprox_suite,
}


def run_suites(settings: InvarianceSettings, seed: int, logger: Logger = None) -> list[SuiteResult]:
    """Run the configured suites with one generator seeded from the configuration"""
    rng = np.random.default_rng(seed)
    results = []
    for name in settings.suites:
        if logger:
            logger.info(f"Run invariance suite '{name}' ...")
        results.append(SUITE_RUNNERS[name](settings, rng))
        if logger:
            logger.info(results[-1].summary() + " ...")
    return results
