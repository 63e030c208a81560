"""Closed-form first differential approximations of the invariant schemes

Each expression is split by its order in the spacing scale. Order 0 of the
difference equations is the ODE itself, written in the normalization of the
closed form. The corrected expressions reproduce the fitted residual
expansions, the printed ones are kept for reference (see DESIGN.md).
"""

# Standard modules
from typing import Callable, Sequence

# Local modules
from ..constants import FirstApproxId, SchemeKind
from ..core import numeric
from ..core.errors import DomainViolation, InvalidSpacing
from ..core.jet import Jet3
from ..core.stencil import Stencil4
from ..invariants.continuous import gl2_invariants
from ..odes.spec import quadratic_residual, residual
from ..schemes.equations import scheme_residuals
from ..schemes.spec import SchemeSpec


FIRST_APPROX_SCHEME = {
    FirstApproxId.SIM2_LATTICE: SchemeKind.INV_SIM2,
    FirstApproxId.SIM2_EQ: SchemeKind.INV_SIM2,
    FirstApproxId.SL2_EQ: SchemeKind.INV_SL2,
    FirstApproxId.GL2_LATTICE: SchemeKind.INV_GL2,
    FirstApproxId.GL2_EQ: SchemeKind.INV_GL2,
}

LATTICE_IDS = (FirstApproxId.SIM2_LATTICE, FirstApproxId.GL2_LATTICE)

# Printed expressions that are not a constant multiple of the corrected ones
PRINTED_VARIANTS = (FirstApproxId.SIM2_EQ, FirstApproxId.GL2_LATTICE)


def _check(approx: FirstApproxId, scheme: SchemeSpec) -> FirstApproxId:
    approx = FirstApproxId(approx)
    if scheme.kind is not FIRST_APPROX_SCHEME[approx]:
        raise ValueError(f"{approx.value} belongs to {FIRST_APPROX_SCHEME[approx].value}, got {scheme.kind.value}!")
    return approx


def _spacings(h: Sequence[numeric.Real]) -> tuple:
    h = tuple(h)
    if len(h) != 3 or not all(value > 0 for value in h):
        raise InvalidSpacing(f"Invalid spacing {h}, expected three positive values!")
    return h


def lattice_gamma(scheme: SchemeSpec) -> float:
    """Chord ratio of the GL(2) lattice, one when the scheme measures it at run time"""
    return 1.0 if scheme.gamma is None else scheme.gamma


def _check_gl2(j: Jet3) -> numeric.Real:
    if not (j.x > 0 and j.y1 > 0):
        raise DomainViolation(f"GL(2) closed forms need x > 0 and y' > 0, got x={j.x}, y'={j.y1}!")
    chord = j.y1 + 2 * j.x * j.y2
    if chord < 0:
        raise DomainViolation(f"GL(2) closed forms need I1 >= 0, got y' + 2xy''={chord}!")
    return chord


def approx_orders(approx: FirstApproxId) -> tuple[int, int]:
    """Orders in eps of the terms of a closed form"""
    approx = FirstApproxId(approx)
    if approx is FirstApproxId.SIM2_LATTICE:
        return 2, 3
    if approx is FirstApproxId.GL2_LATTICE:
        return 1, 2
    return 0, 1


def leading_order(approx: FirstApproxId) -> int:
    """Order of the first term beyond the continuous equation"""
    orders = approx_orders(approx)
    return orders[0] if FirstApproxId(approx) in LATTICE_IDS else orders[1]


def residual_functional(approx: FirstApproxId, scheme: SchemeSpec) -> Callable[[Stencil4], numeric.Real]:
    """The raw scheme equation whose expansion the closed form describes"""
    approx = _check(approx, scheme)
    index = 1 if approx in LATTICE_IDS else 0
    gamma = lattice_gamma(scheme)

    def functional(s: Stencil4) -> numeric.Real:
        return scheme_residuals(scheme, s, gamma)[index]

    return functional


def normalization(approx: FirstApproxId, j: Jet3, scheme: SchemeSpec) -> numeric.Real:
    """Factor N with closed-form term = N * fitted coefficient of the raw residual"""
    approx = _check(approx, scheme)
    if approx is FirstApproxId.SIM2_LATTICE:
        return 2.0
    if approx is FirstApproxId.SIM2_EQ:
        return (1 + j.y1 ** 2) ** 3
    if approx is FirstApproxId.SL2_EQ:
        return 1.0
    _check_gl2(j)
    if approx is FirstApproxId.GL2_LATTICE:
        return -j.x
    invariants = gl2_invariants(j)
    return invariants["I2"] + scheme.ode.amplitude * numeric.power_3_2(invariants["I1"])


def _sim2_lattice(j: Jet3, h: tuple) -> dict:
    h0, h1, h2 = h
    return {
        2: 2 * (h0 * h2 - h1 ** 2) * (1 + j.y1 ** 2),
        3: (2 * h0 * h1 * h2 - 2 * h1 ** 3 - h0 ** 2 * h2 + h0 * h2 ** 2) * j.y1 * j.y2,
    }


def _sim2_eq(j: Jet3, h: tuple, scheme: SchemeSpec, printed: bool) -> dict:
    h0, h1, h2 = h
    total = h0 + h1 + h2
    if printed:
        quadratic = (16 * scheme.alpha * total ** 2 - 4 * h0 ** 2 - 12 * h2 ** 2 - 8 * h1 ** 2
                     - 16 * h0 * h2 - 20 * h1 * h2 + 12 * h0 * h1)
        prefactor = j.y2 ** 3 / (24 * (1 + j.y1 ** 4) * total)
    else:
        quadratic = (16 * scheme.alpha * total ** 2 - 4 * h0 ** 2 - 12 * h0 * h1 - 16 * h0 * h2
                     - 8 * h1 ** 2 - 20 * h1 * h2 - 12 * h2 ** 2)
        prefactor = j.y2 ** 3 / (24 * (1 + j.y1 ** 2) * total)
    first = -prefactor * (scheme.ode.k ** 2 * quadratic + 9 * h1 * (h2 - h0))
    return {0: residual(scheme.ode, j), 1: first}


def _sl2_eq(j: Jet3, h: tuple, scheme: SchemeSpec, printed: bool) -> dict:
    h0, h1, h2 = h
    bracket = h0 * (1 + 4 * scheme.a) - 2 * h1 * (1 - 2 * scheme.b) - h2 * (1 - 4 * scheme.c)
    slope = scheme.ode.forcing.derivative(j.x)
    first = slope * bracket if printed else -slope * bracket / 4
    return {0: residual(scheme.ode, j), 1: first}


def _gl2_lattice(j: Jet3, h: tuple, scheme: SchemeSpec, printed: bool) -> dict:
    _check_gl2(j)
    h0, h1, h2 = h
    gamma, x, p, q = lattice_gamma(scheme), j.x, j.y1, j.y2
    if printed:
        inner = (-gamma * h1 ** 2 + h2 * (h2 + 2 * h1)) * p + x * q * (gamma * h1 ** 2 - h1 * h2 - h2 ** 2)
        second = inner / (2 * x ** 2)
    else:
        inner = (-gamma * h1 ** 2 + h2 * (h2 + 2 * h1)) * p + x * q * (gamma * h1 ** 2 - 2 * h1 * h2 - h2 ** 2)
        second = inner / (2 * x)
    return {1: (gamma * h1 - h2) * p, 2: second}


def _gl2_eq(j: Jet3, h: tuple, scheme: SchemeSpec, printed: bool) -> dict:
    chord = _check_gl2(j)
    h0, h1, h2 = h
    total = h0 + h1 + h2
    alpha, x, p = scheme.alpha, j.x, j.y1
    ode = quadratic_residual(scheme.ode, j) / p ** 10
    if printed:
        bracket = (h0 ** 2 * (32 * alpha - 11) + 16 * h1 ** 2 * (2 * alpha - 1) + h2 ** 2 * (32 * alpha - 21)
                   + h0 * h1 * (64 * alpha - 21) + 32 * h0 * h2 * (2 * alpha - 1) + h1 * h2 * (64 * alpha - 43))
        first = -numeric.sqrt(p) * chord ** 3 * numeric.sqrt(chord) / (16 * x * p ** 10 * total) * bracket
        return {0: ode, 1: first}

    i1 = chord / p ** 3
    a2 = scheme.ode.a ** 2
    bracket = (-3 * (1 - 8 * a2) * (2 * h1 + h2 - h0) / 32 + 3 * h1 * (h1 + 2 * h2) / (16 * total)
               - a2 * (alpha * total + h1 - h0))
    first = 2 * scheme.ode.amplitude * numeric.power_3_2(i1) * (p / x) * i1 ** 2 * bracket
    return {0: ode, 1: first}


def first_approx_terms(approx: FirstApproxId, j: Jet3, h: Sequence[numeric.Real], scheme: SchemeSpec,
                       printed: bool = False) -> dict[int, numeric.Real]:
    """Terms of a closed-form first differential approximation by order in eps

    approx: which expression
    j: the jet the expression is evaluated on
    h: the spacings (h_n, h_{n+1}, h_{n+2})
    scheme: supplies K, alpha, (a, b, c), F, A and gamma
    printed: evaluate the expression as printed instead of the corrected one
    """

    approx = _check(approx, scheme)
    h = _spacings(h)
    if approx is FirstApproxId.SIM2_LATTICE:
        return _sim2_lattice(j, h)
    if approx is FirstApproxId.SIM2_EQ:
        return _sim2_eq(j, h, scheme, printed)
    if approx is FirstApproxId.SL2_EQ:
        return _sl2_eq(j, h, scheme, printed)
    if approx is FirstApproxId.GL2_LATTICE:
        return _gl2_lattice(j, h, scheme, printed)
    return _gl2_eq(j, h, scheme, printed)


def first_approx_value(approx: FirstApproxId, j: Jet3, h: Sequence[numeric.Real], scheme: SchemeSpec,
                       printed: bool = False) -> numeric.Real:
    """The closed-form first differential approximation, all orders summed"""
    return sum(first_approx_terms(approx, j, h, scheme, printed).values())
