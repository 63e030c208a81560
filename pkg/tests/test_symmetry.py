"""Tests of the flows, group elements and prolonged actions"""

# Standard modules
import math

# External modules
import numpy as np
import pytest

# Local modules
from liescheme.constants import AlgebraId
from liescheme.core import Jet3, Point, SpacingDirection, stencil_from_jet
from liescheme.core.errors import NotAGraph, SingularTransform
from liescheme.odes import InitialData, residual
from liescheme.symmetry import (FLOW_LIMITS, GroupElement, apply, apply_stencil, sample_transform_jet,
                                transform_jet)


def test_sim2_quarter_rotation():
    p = apply(GroupElement(AlgebraId.SIM2, ((3, math.pi / 2),)), Point(1.0, 0.0))
    assert p.x == pytest.approx(0.0, abs=1e-15)
    assert p.y == pytest.approx(-1.0)


def test_sl2y_projective_flow_fixes_the_axis():
    assert apply(GroupElement(AlgebraId.SL2Y, ((3, 0.7),)), Point(2.5, 0.0)) == (2.5, 0.0)


def test_gl2xy_projective_flow():
    p = apply(GroupElement(AlgebraId.GL2XY, ((3, 1.0),)), Point(1.0, 0.5))
    assert p == pytest.approx((4.0, 1.0))


def test_gl2xy_projective_flow_solves_its_vector_field():
    # dx/dtau = 2 x y, dy/dtau = y^2
    x, y, tau, d = 1.0, 0.5, 0.3, 1e-6
    p = apply(GroupElement(AlgebraId.GL2XY, ((3, tau),)), Point(x, y))
    q = apply(GroupElement(AlgebraId.GL2XY, ((3, tau + d),)), Point(x, y))
    assert (q.x - p.x) / d == pytest.approx(2 * p.x * p.y, rel=1e-5)
    assert (q.y - p.y) / d == pytest.approx(p.y ** 2, rel=1e-5)


def test_singular_flow():
    with pytest.raises(SingularTransform):
        apply(GroupElement(AlgebraId.SL2Y, ((3, 1.0),)), Point(0.0, 1.0))


def test_unknown_generator():
    with pytest.raises(ValueError):
        GroupElement(AlgebraId.SL2Y, ((4, 0.1),))
    assert GroupElement(AlgebraId.SL2Y, ((4, 0.1),), extended=True).dimension == 4


def test_identity_keeps_stencil():
    s = stencil_from_jet(Jet3(0.2, 0.1, 0.5, 1.0, -1.0), SpacingDirection((1.0, 0.7, 1.3)), 0.1)
    assert apply_stencil(GroupElement.identity(AlgebraId.SIM2), s) == s


def test_sim2_translation_keeps_spacings():
    s = stencil_from_jet(Jet3(0.2, 0.1, 0.5, 1.0, -1.0), SpacingDirection((1.0, 0.7, 1.3)), 0.1)
    moved = apply_stencil(GroupElement(AlgebraId.SIM2, ((1, 0.4), (2, -0.3))), s)
    assert moved.spacings == pytest.approx(s.spacings)
    assert moved.ys == pytest.approx(tuple(y - 0.3 for y in s.ys))


def test_sim2_dilation_scales_spacings():
    s = stencil_from_jet(Jet3(0.2, 0.1, 0.5, 1.0, -1.0), SpacingDirection((1.0, 0.7, 1.3)), 0.1)
    moved = apply_stencil(GroupElement(AlgebraId.SIM2, ((4, math.log(3.0)),)), s)
    assert moved.spacings == pytest.approx(tuple(3 * h for h in s.spacings))


def test_inverse_undoes_the_word(rng):
    for algebra in AlgebraId:
        g = GroupElement.random(algebra, rng)
        p = Point(1.2, 0.3)
        assert apply(g.inverse(), apply(g, p)) == pytest.approx(p)


@pytest.mark.parametrize("algebra", list(AlgebraId))
def test_half_flows_compose_to_the_full_flow(algebra):
    p = Point(1.2, 0.3)
    for mu in range(1, algebra.dimension + 1):
        tau = 0.9 * FLOW_LIMITS[algebra][mu]
        halves = apply(GroupElement(algebra, ((mu, tau / 2), (mu, tau / 2))), p)
        full = apply(GroupElement(algebra, ((mu, tau),)), p)
        assert max(abs(a - b) for a, b in zip(halves, full)) <= 1e-12, f"X{mu} halves {halves} vs {full}"


def test_random_elements_are_reproducible_and_bounded():
    first = GroupElement.random(AlgebraId.GL2XY, np.random.default_rng(3))
    second = GroupElement.random(AlgebraId.GL2XY, np.random.default_rng(3))
    assert first == second
    assert sorted(mu for mu, _ in first.word) == [1, 2, 3, 4]
    for mu, tau in first.word:
        assert abs(tau) <= FLOW_LIMITS[AlgebraId.GL2XY][mu]
        assert first.parameter(mu) == tau


def test_random_elements_restricted_to_generators(rng):
    g = GroupElement.random(AlgebraId.SIM2, rng, generators=[4])
    assert [mu for mu, _ in g.word] == [4]


def test_transform_jet_identity():
    j = Jet3(0.1, 0.2, 0.3, 0.4, 0.5)
    assert transform_jet(GroupElement.identity(AlgebraId.GL2XY), j) == j


def test_transform_jet_translation():
    j = Jet3(0.1, 0.2, 0.3, 0.4, 0.5)
    moved = transform_jet(GroupElement(AlgebraId.SIM2, ((1, 1.0), (2, 2.0))), j)
    assert moved.values() == pytest.approx((1.1, 2.2, 0.3, 0.4, 0.5))


def test_transform_jet_sl2y_scaling():
    j = Jet3(0.1, 0.2, 0.3, 0.4, 0.5)
    tau = 0.35
    moved = transform_jet(GroupElement(AlgebraId.SL2Y, ((2, tau),)), j)
    e = math.exp(tau)
    assert moved.values() == pytest.approx((0.1, 0.2 * e, 0.3 * e, 0.4 * e, 0.5 * e))


def test_transform_jet_rejects_vertical_images():
    with pytest.raises(NotAGraph):
        transform_jet(GroupElement(AlgebraId.SIM2, ((3, math.pi / 2),)), Jet3(0.0, 0.0, 0.0, 1.0, 0.0))


@pytest.mark.parametrize("algebra", list(AlgebraId))
def test_transform_jet_agrees_with_sampled_transport(algebra, rng):
    j = Jet3(1.3, 0.2, 0.8, 0.3, -0.2)
    for _ in range(5):
        g = GroupElement.random(algebra, rng)
        exact = transform_jet(g, j)
        sampled = sample_transform_jet(g, j)
        np.testing.assert_allclose(sampled.values(), exact.values(), rtol=1e-5, atol=1e-6)


@pytest.mark.parametrize("algebra", list(AlgebraId))
def test_symmetries_map_solutions_to_solutions(algebra, odes, rng):
    ode = odes[algebra]
    j = InitialData(1.3, 0.2, 0.8, 0.3).jet(ode)
    assert residual(ode, j) == pytest.approx(0.0, abs=1e-12)
    for _ in range(20):
        g = GroupElement.random(algebra, rng)
        image = transform_jet(g, j)
        assert abs(residual(ode, image)) <= 1e-6 * max(1.0, abs(image.y3)), f"{g} moved the jet off the solution"
