"""Contains the error classes of the library"""


class LieSchemeError(Exception):
    """Base error of the library"""
    pass


class SingularTransform(LieSchemeError):
    """A error for points on the singular locus of a flow"""
    pass


class OrderViolation(LieSchemeError):
    """A error for abscissas that are not strictly increasing"""
    pass


class NotAGraph(LieSchemeError):
    """A error for transformed curves that are no longer graphs over x"""
    pass


class DegenerateStencil(LieSchemeError):
    """A error for stencils with vanishing invariant denominators"""
    pass


class DegenerateJet(LieSchemeError):
    """A error for jets with vanishing invariant denominators"""
    pass


class DomainViolation(LieSchemeError):
    """A error for values outside the domain of a formula"""
    pass


class BlowUp(LieSchemeError):
    """A error for integrations that overflow or underflow their step size"""

    def __init__(self, message: str, x: float = None) -> None:
        super().__init__(message)
        self.x = x


class NewtonDiverged(LieSchemeError):
    """A error for Newton solves that failed to converge"""

    def __init__(self, message: str, report=None) -> None:
        super().__init__(message)
        self.report = report


class IllConditionedFit(LieSchemeError):
    """A error for least squares fits beyond the condition limit"""
    pass


class InvalidSpacing(LieSchemeError, ValueError):
    """A error for non-positive spacings"""
    pass


class ConfigError(LieSchemeError):
    """A error for unreadable or invalid experiment configurations"""
    pass
