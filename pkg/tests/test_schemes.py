"""Tests of the scheme equations, the stepper and the seeding"""

# Standard modules
import dataclasses
import math

# External modules
import pytest

# Local modules
from liescheme.constants import AlgebraId, SchemeKind
from liescheme.core import Point, Stencil4
from liescheme.core.errors import BlowUp, DomainViolation, InvalidSpacing, OrderViolation
from liescheme.invariants import sim2_xi
from liescheme.odes import Forcing, InitialData, OdeSpec, reference_values
from liescheme.schemes import (Lattice, SchemeSpec, StepState, measured_gamma, run, scaled_residuals,
                               scheme_residuals, seed_from_initial_data, step)
from liescheme.symmetry import GroupElement, apply_stencil

from conftest import mobius, mobius_init


SCHEMES = {
    AlgebraId.SIM2: SchemeKind.INV_SIM2,
    AlgebraId.SL2Y: SchemeKind.INV_SL2,
    AlgebraId.GL2XY: SchemeKind.INV_GL2,
}

INITIAL = {
    AlgebraId.SIM2: InitialData(0.0, 0.0, 0.0, 0.5),
    AlgebraId.SL2Y: mobius_init(),
    AlgebraId.GL2XY: InitialData(1.0, 0.0, 1.0, 0.25),
}


def circle_points(angles) -> tuple[Point, ...]:
    """Points of the unit circle around (0, 1) at angles from its bottom"""
    return tuple(Point(math.sin(t), 1 - math.cos(t)) for t in angles)


def mobius_state(x: float, h: float) -> StepState:
    return StepState(tuple(Point(x + k * h, mobius(x + k * h)) for k in (-1, 0, 1)))


def solved_stencils(algebra, odes, steps=8) -> tuple[SchemeSpec, list[Stencil4]]:
    ode = odes[algebra]
    spec = SchemeSpec(SCHEMES[algebra], ode)
    seed = seed_from_initial_data(spec, ode, INITIAL[algebra], 0.02)
    if spec.kind is SchemeKind.INV_GL2:
        spec = dataclasses.replace(spec, gamma=measured_gamma(seed))
    result = run(spec, seed, steps)
    assert result.completed, result.error
    return spec, [Stencil4(result.points[i:i + 4]) for i in range(len(result.points) - 3)]


def test_spec_validation(sim2_ode, sl2_ode):
    with pytest.raises(ValueError):
        SchemeSpec(SchemeKind.INV_SIM2, sl2_ode)
    with pytest.raises(InvalidSpacing):
        SchemeSpec(SchemeKind.STD, sim2_ode, h=0.0)
    with pytest.raises(ValueError):
        SchemeSpec(SchemeKind.INV_GL2, OdeSpec.gl2xy(), gamma=-1.0)
    with pytest.raises(ValueError):
        Lattice("random")
    assert Lattice.geometric(1.5).next_spacing(0.2) == pytest.approx(0.3)
    assert Lattice()(0.0, 0.0, 0.0, 0.0) == 0.0


def test_step_state_needs_increasing_abscissas():
    with pytest.raises(OrderViolation):
        StepState(((0.0, 0.0), (0.2, 0.1), (0.1, 0.2)))


def test_sl2_scheme_is_exact_on_mobius_curves(mobius_ode):
    spec = SchemeSpec(SchemeKind.INV_SL2, mobius_ode)
    point, report = step(spec, mobius_state(0.1, 0.05))
    assert point.x == pytest.approx(0.2)
    assert point.y == pytest.approx(mobius(point.x), abs=1e-12)
    assert report.converged

    result = run(spec, mobius_state(0.0, 0.02), 100)
    assert result.completed
    assert max(abs(p.y - mobius(p.x)) for p in result.points) <= 1e-10


def test_sl2_scheme_on_a_geometric_lattice(mobius_ode):
    spec = SchemeSpec(SchemeKind.INV_SL2, mobius_ode, lattice=Lattice.geometric(1.1))
    result = run(spec, mobius_state(0.0, 0.01), 10)
    xs = result.xs
    for left, middle, right in zip(xs, xs[1:], xs[2:]):
        if left >= 0:
            assert right - middle == pytest.approx(1.1 * (middle - left))
    assert max(abs(p.y - mobius(p.x)) for p in result.points) <= 1e-10


def test_standard_scheme_keeps_lines():
    spec = SchemeSpec(SchemeKind.STD, OdeSpec.sim2(0.0))
    point, _ = step(spec, StepState(((0.0, 2.0), (0.1, 2.0), (0.2, 2.0))))
    assert point == pytest.approx((0.3, 2.0))


def test_sim2_scheme_keeps_circles():
    spec = SchemeSpec(SchemeKind.INV_SIM2, OdeSpec.sim2(0.0))
    delta = 0.05
    seed = StepState(circle_points((-delta, 0.0, delta)))
    result = run(spec, seed, 5)
    assert result.completed
    for report in result.reports:
        assert report.converged
    for p in result.points:
        assert p.x ** 2 + (p.y - 1) ** 2 == pytest.approx(1.0, abs=1e-9)
    xi = sim2_xi(Stencil4(result.points[-4:]))
    assert xi.xi1 * xi.xi3 - xi.xi2 ** 2 == pytest.approx(0.0, abs=1e-12)


def test_zero_steps_return_the_seed(sim2_ode):
    spec = SchemeSpec(SchemeKind.INV_SIM2, sim2_ode)
    seed = seed_from_initial_data(spec, sim2_ode, INITIAL[AlgebraId.SIM2], 0.02)
    result = run(spec, seed, 0)
    assert result.points == seed.points
    assert result.reports == ()
    assert result.completed


def test_run_halts_with_partial_trajectory(gl2_ode):
    spec = SchemeSpec(SchemeKind.INV_GL2, gl2_ode)
    seed = StepState(((1.0, 0.0), (1.1, -0.1), (1.2, -0.2)))
    result = run(spec, seed, 5)
    assert not result.completed
    assert isinstance(result.error, DomainViolation)
    assert result.halt_index == 0
    assert result.points == seed.points
    with pytest.raises(DomainViolation):
        result.raise_error()


def test_seeds_lie_on_the_solution(mobius_ode):
    circle = InitialData(0.1, 1 - math.sqrt(0.99), 0.1 / math.sqrt(0.99), 0.99 ** -1.5)
    ode = OdeSpec.sim2(0.0)
    seed = seed_from_initial_data(SchemeSpec(SchemeKind.INV_SIM2, ode), ode, circle, 0.05)
    assert [p.x for p in seed.points] == pytest.approx([0.05, 0.1, 0.15])
    for p in seed.points:
        assert p.x ** 2 + (p.y - 1) ** 2 == pytest.approx(1.0, abs=1e-11)

    seed = seed_from_initial_data(SchemeSpec(SchemeKind.INV_SL2, mobius_ode), mobius_ode, mobius_init(), 0.05)
    for p in seed.points:
        assert p.y == pytest.approx(mobius(p.x), abs=1e-12)


def test_seeding_needs_positive_eps(sim2_ode):
    with pytest.raises(InvalidSpacing):
        seed_from_initial_data(SchemeSpec(SchemeKind.INV_SIM2, sim2_ode), sim2_ode, INITIAL[AlgebraId.SIM2], 0.0)


@pytest.mark.parametrize("algebra", list(AlgebraId))
def test_runs_solve_their_scheme(algebra, odes):
    spec, stencils = solved_stencils(algebra, odes)
    for s in stencils:
        assert max(abs(float(r)) for r in scaled_residuals(spec, s)) <= 10 * spec.newton_tol


@pytest.mark.parametrize("algebra", list(AlgebraId))
def test_transformed_solutions_still_solve_the_scheme(algebra, odes, rng):
    spec, stencils = solved_stencils(algebra, odes)
    for index in range(100):
        g = GroupElement.random(algebra, rng)
        residuals = scaled_residuals(spec, apply_stencil(g, stencils[index % len(stencils)]))
        assert max(abs(float(r)) for r in residuals) <= 10 * spec.newton_tol, f"{g} broke the scheme"


@pytest.mark.parametrize("algebra", [AlgebraId.SIM2, AlgebraId.GL2XY])
def test_dilations_keep_the_zero_sets(algebra, odes):
    spec, stencils = solved_stencils(algebra, odes)
    for tau in (-0.5, 0.3, 1.0):
        g = GroupElement(algebra, ((4, tau),))
        for s in stencils:
            assert max(abs(float(r)) for r in scaled_residuals(spec, apply_stencil(g, s))) <= 10 * spec.newton_tol


def test_raw_and_scaled_residuals_share_zeros(sim2_ode):
    spec = SchemeSpec(SchemeKind.INV_SIM2, sim2_ode)
    s = Stencil4(circle_points((-0.1, 0.0, 0.1, 0.25)))
    raw, scaled = scheme_residuals(spec, s), scaled_residuals(spec, s)
    for r, q in zip(raw, scaled):
        assert (r == 0) == (q == 0)
        assert math.copysign(1.0, r) == math.copysign(1.0, q)


@pytest.mark.parametrize("ode, init", [
    (OdeSpec.sim2(1.0), InitialData(0.0, 0.0, 0.0, 0.5)),
    (OdeSpec.gl2xy(-1.0), InitialData(1.0, 0.0, 1.0, 0.25)),
])
def test_invariant_scheme_beats_the_standard_baseline(ode, init):
    errors = {}
    for kind in (SCHEMES[ode.algebra], SchemeKind.STD):
        spec = SchemeSpec(kind, ode)
        result = run(spec, seed_from_initial_data(spec, ode, init, 0.02), 25)
        assert result.completed, result.error
        final = result.points[-1]
        errors[kind] = abs(final.y - reference_values(ode, init, [final.x])[0].y)
    assert errors[SCHEMES[ode.algebra]] < errors[SchemeKind.STD], f"errors {errors}"


def test_sl2_scheme_with_forcing_keeps_the_lattice(sl2_ode):
    spec = SchemeSpec(SchemeKind.INV_SL2, sl2_ode)
    init = InitialData(0.0, 0.0, 1.0, 0.0)
    result = run(spec, seed_from_initial_data(spec, sl2_ode, init, 0.02), 20)
    assert result.completed
    spacings = [b - a for a, b in zip(result.xs, result.xs[1:])]
    assert spacings == pytest.approx([0.02] * len(spacings))
    reference = reference_values(sl2_ode, init, result.xs)
    assert max(abs(p.y - j.y) for p, j in zip(result.points, reference)) < 1e-4


@pytest.mark.parametrize("kind, ode, init", [
    (SchemeKind.STD, OdeSpec.sim2(1.0), InitialData(0.0, 0.0, 0.0, 0.5)),
    (SchemeKind.STD, OdeSpec.gl2xy(-1.0), InitialData(1.0, 0.0, 1.0, 0.25)),
    (SchemeKind.INV_SL2, OdeSpec.sl2y(Forcing("sin")), InitialData(0.0, 0.0, 1.0, 0.0)),
])
def test_explicit_steps_report_their_residuals(kind, ode, init):
    spec = SchemeSpec(kind, ode)
    seed = seed_from_initial_data(spec, ode, init, 0.02)
    result = run(spec, seed, 10)
    assert result.completed, result.error
    for report in result.reports:
        assert report.converged, f"residual {report.residual_norm:.3e} above {spec.newton_tol:g}"

    strict = dataclasses.replace(spec, newton_tol=1e-300)
    reports = run(strict, seed, 10).reports
    assert not all(report.converged for report in reports)
    assert [r.residual_norm for r in reports] == [r.residual_norm for r in result.reports]


@pytest.mark.parametrize("kind, ode, init", [
    (SchemeKind.INV_SIM2, OdeSpec.sim2(1.0), InitialData(0.0, 0.0, 0.0, 0.5)),
    (SchemeKind.INV_SL2, OdeSpec.sl2y(Forcing("sin")), InitialData(0.0, 0.0, 1.0, 0.0)),
    (SchemeKind.INV_GL2, OdeSpec.gl2xy(-1.0), InitialData(1.0, 0.0, 1.0, 0.25)),
    (SchemeKind.STD, OdeSpec.sim2(1.0), InitialData(0.0, 0.0, 0.0, 0.5)),
])
def test_runs_converge_under_seed_refinement(kind, ode, init):
    errors = []
    for eps in (0.04, 0.02, 0.01):
        spec = SchemeSpec(kind, ode)
        result = run(spec, seed_from_initial_data(spec, ode, init, eps), round(0.48 / eps))
        assert result.completed, result.error
        reference = reference_values(ode, init, result.xs)
        errors.append(max(abs(p.y - j.y) for p, j in zip(result.points, reference)))
    orders = [math.log2(coarse / fine) for coarse, fine in zip(errors, errors[1:])]
    assert min(orders) >= 0.9, f"{kind.value} observed orders {orders} for errors {errors}"


def test_run_halts_when_the_solution_blows_up():
    spec = SchemeSpec(SchemeKind.STD, OdeSpec.sim2(0.0))
    result = run(spec, StepState(((0.0, 0.0), (1.0, 4e11), (2.0, 8e11))), 3)
    assert isinstance(result.error, BlowUp)
    assert result.error.x == 3.0
    assert result.halt_index == 0
