"""Comparison of the closed forms with fitted expansions and their zero sets"""

# Standard modules
from dataclasses import dataclass
from logging import Logger
from typing import Optional

# Local modules
from ..constants import DEFAULT_EPS0, GAP_FLOOR, FirstApproxId
from ..core import newton
from ..core.errors import InvalidSpacing
from ..core.jet import Jet3
from ..core.stencil import SpacingDirection
from ..odes.curve import SolutionCurve
from ..schemes.spec import SchemeSpec
from .closed_forms import approx_orders, first_approx_terms, first_approx_value, lattice_gamma, normalization, \
    residual_functional
from .expansion import ExpansionReport, extract_expansion


def relative_gap(fitted: float, closed: float) -> float:
    """Distance of two values relative to the larger one, small values count against a floor"""
    return abs(fitted - closed) / max(abs(fitted), abs(closed), GAP_FLOOR)


@dataclass(frozen=True)
class OrderGap:
    """Fitted N c_k against the closed-form term of order k"""

    order: int
    fitted: float
    closed: float
    gap: float


@dataclass(frozen=True)
class ClosedFormComparison:
    """Agreement of one closed form with the fitted residual expansion"""

    approx: FirstApproxId
    report: ExpansionReport
    normalization: float
    gaps: tuple[OrderGap, ...]

    # PROPERTIES

    @property
    def max_gap(self) -> float:
        return max(entry.gap for entry in self.gaps)

    # METHODS

    def order(self, order: int) -> OrderGap:
        for entry in self.gaps:
            if entry.order == order:
                return entry
        raise KeyError(f"{self.approx.value} has no term of order {order}!")


def compare_closed_form(approx: FirstApproxId, curve: SolutionCurve, direction: SpacingDirection,
                        scheme: SchemeSpec, eps0: float = DEFAULT_EPS0, degree: Optional[int] = None,
                        levels: Optional[int] = None, printed: bool = False,
                        logger: Logger = None) -> ClosedFormComparison:
    """Fit the raw scheme residual on the solution and compare every order with the closed form

    The closed form is evaluated at h = alpha, so its order k term is the eps^k
    coefficient of the normalized residual.
    """

    approx = FirstApproxId(approx)
    orders = approx_orders(approx)
    degree = max(orders) + 3 if degree is None else degree
    levels = degree + 4 if levels is None else levels

    report = extract_expansion(residual_functional(approx, scheme), curve.jet, direction, eps0, levels,
                               curve=curve, degree=degree, logger=logger)
    factor = float(normalization(approx, curve.jet, scheme))
    terms = first_approx_terms(approx, curve.jet, direction.alpha, scheme, printed)

    gaps = []
    for order in orders:
        fitted, closed = factor * report.coefficient(order), float(terms[order])
        gaps.append(OrderGap(order, fitted, closed, relative_gap(fitted, closed)))
    comparison = ClosedFormComparison(approx, report, factor, tuple(gaps))
    if logger:
        logger.info(f"{approx.value}: largest gap between fit and closed form {comparison.max_gap:.3e} ...")
    return comparison


def _zero_guess(approx: FirstApproxId, h0: float, h1: float, scheme: SchemeSpec) -> float:
    if approx is FirstApproxId.SIM2_LATTICE:
        return h1 ** 2 / h0
    if approx is FirstApproxId.GL2_LATTICE:
        return lattice_gamma(scheme) * h1
    return h1


def value_scale(approx: FirstApproxId, j: Jet3, h0: float, h1: float, scheme: SchemeSpec,
                printed: bool = False) -> float:
    """Magnitude of a closed form near h_{n+2} = h1, the unit of its zero-set residuals"""
    return abs(float(first_approx_value(approx, j, (h0, h1, h1), scheme, printed))) + \
        abs(float(first_approx_value(approx, j, (h0, h1, 2 * h1), scheme, printed)))


def zero_set_spacing(approx: FirstApproxId, j: Jet3, h0: float, h1: float, scheme: SchemeSpec,
                     printed: bool = False, logger: Logger = None) -> float:
    """The spacing h_{n+2} putting (h0, h1, h_{n+2}) on the zero set of a closed form"""
    approx = FirstApproxId(approx)
    if not (h0 > 0 and h1 > 0):
        raise InvalidSpacing(f"Invalid spacings h0={h0}, h1={h1}, must be positive!")

    magnitude = value_scale(approx, j, h0, h1, scheme, printed)
    if magnitude == 0:
        return h1

    def balance(z):
        return [float(first_approx_value(approx, j, (h0, h1, z[0]), scheme, printed)) / magnitude]

    root, _ = newton.solve(balance, [_zero_guess(approx, h0, h1, scheme)], scale=[h1], logger=logger)
    if not root[0] > 0:
        raise InvalidSpacing(f"{approx.value} has no zero with positive h_(n+2) for h0={h0}, h1={h1}!")
    return float(root[0])
