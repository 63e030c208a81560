"""Contains the zero-set invariance checks of the closed forms

A closed form truncated after order k keeps its zero set under the symmetry
group up to terms of order k + 1. The defect of a transformed zero is measured
in units of the closed form's magnitude, and it has to shrink under refinement
of the spacings at the rate the truncation leaves.
"""

# Standard modules
import math
from dataclasses import dataclass
from logging import Logger
from typing import Optional, Sequence

# Local modules
from ..constants import (DEFECT_FLOOR, INVARIANCE_LEVELS, INVARIANCE_ORDER_SLACK, INVARIANCE_TOLERANCE,
                         FirstApproxId)
from ..core.jet import Jet3
from ..core.stencil import SpacingDirection, stencil_from_jet
from ..schemes.spec import SchemeSpec
from ..symmetry.element import GroupElement, apply_stencil, transform_jet
from .closed_forms import approx_orders, first_approx_value
from .comparison import value_scale, zero_set_spacing


@dataclass(frozen=True)
class InvarianceReport:
    """Closed form before and after a group transformation

    original_scale, transformed_scale: magnitudes of the closed form around both configurations
    ratio: transformed over original value, None when either vanishes
    """

    approx: FirstApproxId
    original: float
    transformed: float
    original_scale: float
    transformed_scale: float
    ratio: Optional[float]
    spacings: tuple[float, float, float]

    # PROPERTIES

    @property
    def relative_original(self) -> float:
        return abs(self.original) / self.original_scale if self.original_scale > 0 else abs(self.original)

    @property
    def relative_defect(self) -> float:
        return abs(self.transformed) / self.transformed_scale if self.transformed_scale > 0 else abs(self.transformed)

    @property
    def on_zero_set(self) -> bool:
        return self.relative_original <= INVARIANCE_TOLERANCE

    @property
    def preserved(self) -> bool:
        """A configuration on the zero set stays on it within ten times the tolerance"""
        return not self.on_zero_set or self.relative_defect <= 10 * INVARIANCE_TOLERANCE


def check_first_approx_invariance(approx: FirstApproxId, g: GroupElement, j: Jet3, h: Sequence[float],
                                  scheme: SchemeSpec, printed: bool = False) -> InvarianceReport:
    """Transform the stencil realizing spacings h around j and re-evaluate the closed form"""
    approx = FirstApproxId(approx)
    h = tuple(float(value) for value in h)
    moved = apply_stencil(g, stencil_from_jet(j, SpacingDirection(h), 1.0))
    moved_jet = transform_jet(g, j)
    moved_h = tuple(float(value) for value in moved.spacings)

    original = float(first_approx_value(approx, j, h, scheme, printed))
    transformed = float(first_approx_value(approx, moved_jet, moved_h, scheme, printed))
    original_scale = value_scale(approx, j, h[0], h[1], scheme, printed)
    transformed_scale = value_scale(approx, moved_jet, moved_h[0], moved_h[1], scheme, printed)
    ratio = transformed / original if original != 0 and transformed != 0 else None
    return InvarianceReport(approx, original, transformed, original_scale, transformed_scale, ratio, moved_h)


def expected_defect_order(approx: FirstApproxId) -> int:
    """Rate of the relative zero-set defect, order 0 terms vanish on solutions"""
    orders = approx_orders(approx)
    return max(orders) + 1 - max(min(orders), 1)


@dataclass(frozen=True)
class ZeroSetRefinement:
    """Relative zero-set defects of one transformation on successively halved spacings"""

    approx: FirstApproxId
    spacings: tuple[tuple[float, float, float], ...]
    defects: tuple[float, ...]

    # PROPERTIES

    @property
    def expected_order(self) -> int:
        return expected_defect_order(self.approx)

    @property
    def orders(self) -> tuple[float, ...]:
        """Observed orders between levels, pairs reaching the floor left out"""
        return tuple(math.log2(coarse / fine) for coarse, fine in zip(self.defects, self.defects[1:])
                     if coarse > DEFECT_FLOOR and fine > DEFECT_FLOOR)

    @property
    def preserved(self) -> bool:
        return all(order >= self.expected_order - INVARIANCE_ORDER_SLACK for order in self.orders)


def refine_zero_set_invariance(approx: FirstApproxId, g: GroupElement, j: Jet3, h0: float, h1: float,
                               scheme: SchemeSpec, printed: bool = False, levels: int = INVARIANCE_LEVELS,
                               logger: Logger = None) -> ZeroSetRefinement:
    """Put (h0, h1) / 2^k on the zero set and measure the defect of its image for k < levels

    Raises the error of zero_set_spacing when a level has no positive zero.
    """

    approx = FirstApproxId(approx)
    if levels < 2:
        raise ValueError(f"Need at least two refinement levels, got {levels}!")
    spacings, defects = [], []
    for level in range(levels):
        a, b = h0 / 2 ** level, h1 / 2 ** level
        h = (a, b, zero_set_spacing(approx, j, a, b, scheme, printed, logger))
        report = check_first_approx_invariance(approx, g, j, h, scheme, printed)
        spacings.append(h)
        defects.append(report.relative_defect)
    refinement = ZeroSetRefinement(approx, tuple(spacings), tuple(defects))
    if logger:
        logger.debug(f"{approx.value}: zero-set defects {refinement.defects} under {g} ...")
    return refinement
