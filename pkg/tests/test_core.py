"""Tests of the geometric primitives and the Newton kernel"""

# Standard modules
import math

# External modules
import mpmath
import numpy as np
import pytest

# Local modules
from liescheme.core import (Jet3, Point, Series, SpacingDirection, Stencil4, discrete_derivatives,
                            divided_differences, newton, stencil_from_jet)
from liescheme.core.errors import (DomainViolation, InvalidSpacing, LieSchemeError, NewtonDiverged,
                                   OrderViolation)


def test_point_rejects_non_finite_coordinates():
    with pytest.raises(DomainViolation):
        Point(math.inf, 0.0)
    with pytest.raises(DomainViolation):
        Point(0.0, math.nan)


def test_point_coordinates():
    p = Point(3, 4.5)
    assert (p.x, p.y) == (3, 4.5)
    assert p.as_float() == (3.0, 4.5)
    assert str(p) == "(3, 4.5)"


def test_stencil_needs_increasing_abscissas():
    with pytest.raises(OrderViolation):
        Stencil4([(0, 0), (1, 0), (1, 1), (2, 0)])
    with pytest.raises(ValueError):
        Stencil4([(0, 0), (1, 0), (2, 0)])


def test_stencil_spacings_and_base():
    s = Stencil4([(0.0, 1.0), (0.5, 2.0), (1.5, 3.0), (3.0, 4.0)])
    assert s.spacings == (0.5, 1.0, 1.5)
    assert s.base == Point(0.5, 2.0)
    assert s.xs == (0.0, 0.5, 1.5, 3.0)


def test_spacing_direction_validation():
    with pytest.raises(InvalidSpacing):
        SpacingDirection((1.0, 0.0, 1.0))
    with pytest.raises(ValueError):
        SpacingDirection((1.0, 1.0))
    assert SpacingDirection((1.0, 2.0, 3.0)).offsets(0.5) == (-0.5, 0.0, 1.0, 2.5)


@pytest.mark.parametrize("ys, expected", [
    ((0, 1, 2, 3), (1, 0, 0)),
    ((0, 1, 4, 9), (1, 2, 0)),
    ((0, 1, 8, 27), (1, 6, 6)),
])
def test_discrete_derivatives_of_polynomials(ys, expected):
    s = Stencil4(zip((0.0, 1.0, 2.0, 3.0), map(float, ys)))
    assert discrete_derivatives(s) == pytest.approx(expected)


def test_divided_differences_leading_entries():
    assert divided_differences((0.0, 1.0, 3.0), (1.0, 2.0, 10.0)) == pytest.approx([1.0, 1.0, 1.0])


def test_stencil_from_zero_jet():
    s = stencil_from_jet(Jet3(0.0, 0.0, 0.0, 0.0, 0.0), SpacingDirection((0.3, 1.0, 2.0)), 0.1)
    assert s.ys == (0.0, 0.0, 0.0, 0.0)


def test_stencil_from_jet_of_a_line():
    h = 0.25
    s = stencil_from_jet(Jet3(0.0, 0.0, 1.0, 0.0, 0.0), SpacingDirection.uniform(), h)
    assert list(s) == [(-h, -h), (0.0, 0.0), (h, h), (2 * h, 2 * h)]


def test_stencil_from_jet_of_a_parabola():
    s = stencil_from_jet(Jet3(0.0, 0.0, 0.0, 2.0, 0.0), SpacingDirection.uniform(), 1.0)
    assert s.ys == pytest.approx((1.0, 0.0, 1.0, 4.0))


@pytest.mark.parametrize("j, direction", [
    (Jet3(0.3, 1.0, -0.5, 2.0, 1.5), SpacingDirection.uniform()),
    (Jet3(-1.0, 0.2, 0.8, -1.2, 3.0), SpacingDirection((0.5, 1.0, 2.0))),
])
def test_discrete_derivatives_converge_to_the_jet(j, direction):
    epsilons = [0.01 / 2 ** k for k in range(4)]
    errors = [max(abs(d - e) for d, e in zip(discrete_derivatives(stencil_from_jet(j, direction, eps)),
                                             (j.y1, j.y2, j.y3))) for eps in epsilons]
    orders = [math.log2(coarse / fine) for coarse, fine in zip(errors, errors[1:])]
    assert min(orders) >= 0.95, f"observed orders {orders} for errors {errors}"


def test_stencil_from_jet_rejects_zero_eps():
    with pytest.raises(InvalidSpacing):
        stencil_from_jet(Jet3(0.0, 0.0, 1.0, 0.0, 0.0), SpacingDirection.uniform(), 0.0)


def test_jet_rejects_non_finite_entries():
    with pytest.raises(DomainViolation):
        Jet3(0.0, 0.0, math.inf, 0.0, 0.0)


def test_jet_series_matches_taylor_polynomial():
    j = Jet3(1.0, 2.0, -1.0, 3.0, 6.0)
    x, y = j.series()
    assert x.derivatives() == pytest.approx((1.0, 1.0, 0.0, 0.0))
    assert y.derivatives() == pytest.approx((2.0, -1.0, 3.0, 6.0))
    assert y.evaluate(0.3) == pytest.approx(j.taylor(1.3))


def test_series_arithmetic():
    t = Series.variable(0.0, 3)
    inverse = 1 / (1 - t)
    assert tuple(inverse) == pytest.approx((1.0, 1.0, 1.0, 1.0))
    assert tuple((1 + t) * (1 - t)) == pytest.approx((1.0, 0.0, -1.0, 0.0))
    with pytest.raises(ZeroDivisionError):
        t.reciprocal()
    with pytest.raises(ValueError):
        t + Series.variable(0.0, 2)


def test_series_works_with_mpmath():
    with mpmath.workdps(30):
        t = Series.variable(mpmath.mpf(1), 2)
        square = t * t
        assert square.value == 1
        assert float(square[1]) == 2.0


def test_newton_solves_a_small_system():
    def residual(v):
        return [v[0] ** 2 + v[1] ** 2 - 2, v[0] - v[1]]

    solution, report = newton.solve(residual, [2.0, 0.5])
    assert report.converged
    np.testing.assert_allclose(solution, [1.0, 1.0], rtol=1e-10)
    assert report.residual_norm <= 1e-12


def test_newton_reports_divergence():
    with pytest.raises(NewtonDiverged) as info:
        newton.solve(lambda v: [v[0] ** 2 + 1], [1.0], max_iter=5)
    assert info.value.report is not None
    assert not info.value.report.converged


def test_newton_treats_domain_errors_as_bad_points():
    def residual(v):
        if v[0] <= 0:
            raise DomainViolation("outside")
        return [math.log(v[0])]

    solution, report = newton.solve(residual, [3.0])
    assert solution[0] == pytest.approx(1.0)
    assert report.converged


def test_newton_rejects_guess_outside_domain():
    def residual(v):
        raise DomainViolation("nowhere defined")

    with pytest.raises(LieSchemeError):
        newton.solve(residual, [1.0])
