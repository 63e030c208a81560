"""Lattice and difference equations of the schemes, raw and scaled

The scaled residuals share the zero sets of the raw equations and are invariant
under each scheme's full symmetry group, dilations included.
"""

# Standard modules
import dataclasses
import math

# Local modules
from ..constants import SchemeKind
from ..core import numeric
from ..core.errors import DomainViolation
from ..core.jet import Jet3
from ..core.stencil import Stencil4, discrete_derivatives
from ..invariants.gl2 import gl2_brackets, gl2_xi
from ..invariants.sim2 import sim2_quotients, sim2_xi
from ..invariants.sl2 import sl2_cross_ratio, spacing_cross_ratio, spacing_weight
from ..odes.spec import residual
from .spec import SchemeSpec


def _ratio(value: numeric.Real, scale: numeric.Real) -> numeric.Real:
    return value / scale if scale != 0 else value


def forcing_point(spec: SchemeSpec, s: Stencil4) -> numeric.Real:
    """Evaluation point x_n + a h_n + b h_{n+1} + c h_{n+2} of the forcing"""
    h0, h1, h2 = s.spacings
    return s.base.x + spec.a * h0 + spec.b * h1 + spec.c * h2


def gl2_power(j1: numeric.Real) -> numeric.Real:
    if j1 < 0:
        raise DomainViolation(f"The power 3/2 needs J1 >= 0, got {j1}!")
    return numeric.power_3_2(j1)


def _sim2_terms(spec: SchemeSpec, s: Stencil4) -> tuple:
    xi = sim2_xi(s)
    right, left = sim2_quotients(xi)
    total = xi.xi1 + xi.xi2 + xi.xi3
    j1 = 2 * spec.alpha * right + 2 * (1 - spec.alpha) * left
    j2 = 6 / total * (right - left)
    lattice = (xi.xi1 * xi.xi3 - xi.xi2 ** 2, xi.xi1 * xi.xi3 + xi.xi2 ** 2)
    difference = (j2 - spec.ode.k * j1 ** 2, 6 * (abs(right) + abs(left)) / total + abs(spec.ode.k) * j1 ** 2)
    return difference, lattice


def _sl2_terms(spec: SchemeSpec, s: Stencil4) -> tuple:
    h0, h1, h2 = s.spacings
    weight, x_ratio, y_ratio = spacing_weight(h0, h1, h2), spacing_cross_ratio(h0, h1, h2), sl2_cross_ratio(s)
    forcing = spec.ode.forcing(forcing_point(spec, s))
    factor = spec.lattice.factor
    lattice = (spec.lattice(s.base.x, h0, h1, h2), h2 + factor * h1)
    difference = (weight * (x_ratio - y_ratio) - forcing, weight * (abs(x_ratio) + abs(y_ratio)) + abs(forcing))
    return difference, lattice


def _gl2_terms(spec: SchemeSpec, s: Stencil4, gamma: numeric.Real) -> tuple:
    xi = gl2_xi(s)
    right, left = gl2_brackets(s, xi)
    total = xi.xi1 + xi.xi2 + xi.xi3
    j1 = 8 * (spec.alpha * right + (1 - spec.alpha) * left) / xi.xi2
    j2 = 12 / (xi.xi2 * total) * (right - left)
    power = gl2_power(j1)
    lattice = (xi.xi1 - gamma * xi.xi2, abs(xi.xi1) + abs(gamma * xi.xi2))
    difference = (j2 - spec.ode.amplitude * power,
                  12 * (abs(right) + abs(left)) / abs(xi.xi2 * total) + abs(spec.ode.a) * power)
    return difference, lattice


def _std_terms(spec: SchemeSpec, s: Stencil4) -> tuple:
    h = spec.h if spec.h is not None else s.spacings[1]
    jet = Jet3(s.base.x, s.base.y, *discrete_derivatives(s))
    value = residual(spec.ode, jet)
    # Residual is affine in y''', scaled by the size of the divided difference terms
    slope = residual(spec.ode, dataclasses.replace(jet, y3=jet.y3 + 1)) - value
    xs, ys = s.xs, s.ys
    weights = sum(abs(ys[i] / math.prod(xs[i] - xs[k] for k in range(4) if k != i)) for i in range(4))
    return (value, abs(slope) * 6 * weights), (s.spacings[2] - h, h)


def _terms(spec: SchemeSpec, s: Stencil4, gamma: numeric.Real = None) -> tuple:
    if spec.kind is SchemeKind.INV_SIM2:
        return _sim2_terms(spec, s)
    if spec.kind is SchemeKind.INV_SL2:
        return _sl2_terms(spec, s)
    if spec.kind is SchemeKind.INV_GL2:
        return _gl2_terms(spec, s, spec.gamma if gamma is None else gamma)
    return _std_terms(spec, s)


def scheme_residuals(spec: SchemeSpec, s: Stencil4, gamma: numeric.Real = None) -> tuple[numeric.Real, numeric.Real]:
    """Raw (difference equation, lattice equation) residuals"""
    (difference, _), (lattice, _) = _terms(spec, s, gamma)
    return difference, lattice


def scaled_residuals(spec: SchemeSpec, s: Stencil4, gamma: numeric.Real = None) -> tuple[numeric.Real, numeric.Real]:
    """Residuals divided by the magnitude of their terms"""
    (difference, difference_scale), (lattice, lattice_scale) = _terms(spec, s, gamma)
    return _ratio(difference, difference_scale), _ratio(lattice, lattice_scale)
