"""Contains the damped Newton kernel for small nonlinear systems"""

# Standard modules
from dataclasses import dataclass
from logging import Logger
from typing import Callable, Sequence

# External modules
import numpy as np

# Local modules
from ..constants import JACOBIAN_PERTURBATION, NEWTON_MAX_HALVINGS, NEWTON_MAX_ITERATIONS, NEWTON_TOLERANCE
from .errors import LieSchemeError, NewtonDiverged


@dataclass(frozen=True)
class NewtonReport:
    """Outcome of one Newton solve"""

    iterations: int
    residual_norm: float
    converged: bool


def _evaluate(residual: Callable[[np.ndarray], Sequence[float]], x: np.ndarray) -> tuple[np.ndarray, float]:
    """Evaluate the residual, points outside its domain count as infinitely bad"""
    try:
        f = np.asarray(residual(x), dtype=float)
    except (LieSchemeError, ValueError, ZeroDivisionError, OverflowError):
        return None, np.inf
    if not np.all(np.isfinite(f)):
        return None, np.inf
    return f, float(np.max(np.abs(f)))


def jacobian(residual: Callable[[np.ndarray], Sequence[float]], x: np.ndarray, f: np.ndarray,
             scale: np.ndarray, perturbation: float = JACOBIAN_PERTURBATION) -> np.ndarray:
    """Forward difference Jacobian, falling back to backward differences at domain borders"""
    jac = np.empty((len(f), len(x)))
    for i in range(len(x)):
        delta = perturbation * max(abs(x[i]), scale[i])
        shifted = x.copy()
        shifted[i] += delta
        f_shifted, norm = _evaluate(residual, shifted)
        if not np.isfinite(norm):
            shifted[i] = x[i] - delta
            f_shifted, norm = _evaluate(residual, shifted)
            if not np.isfinite(norm):
                raise NewtonDiverged(f"Cannot difference the residual around {x}!")
            delta = -delta
        jac[:, i] = (f_shifted - f) / delta
    return jac


def solve(residual: Callable[[np.ndarray], Sequence[float]], guess: Sequence[float], *,
          tol: float = NEWTON_TOLERANCE, max_iter: int = NEWTON_MAX_ITERATIONS, scale: Sequence[float] = None,
          perturbation: float = JACOBIAN_PERTURBATION, max_halvings: int = NEWTON_MAX_HALVINGS,
          logger: Logger = None) -> tuple[np.ndarray, NewtonReport]:
    """Solve residual(x) = 0 by damped Newton iteration with a finite difference Jacobian

    residual: maps an array of unknowns to an array of residuals of the same length
    guess: the initial guess, must lie inside the residual's domain
    tol: convergence threshold on the maximum norm of the residual
    max_iter: maximum number of Newton iterations
    scale: typical magnitudes of the unknowns, used for the difference increments
    max_halvings: maximum number of step halvings per iteration
    """

    x = np.array(guess, dtype=float)
    scale = np.ones_like(x) if scale is None else np.asarray(scale, dtype=float)
    f, norm = _evaluate(residual, x)
    if f is None:
        raise NewtonDiverged(f"Initial guess {x} is outside the residual's domain!", NewtonReport(0, np.inf, False))

    for iteration in range(max_iter + 1):

        # Check for convergence
        if norm <= tol:
            if logger:
                logger.debug(f"Newton converged after {iteration} iterations (residual {norm:.3e}) ...")
            return x, NewtonReport(iteration, norm, True)
        if iteration == max_iter:
            break

        # Newton direction
        try:
            dx = np.linalg.solve(jacobian(residual, x, f, scale, perturbation), -f)
        except np.linalg.LinAlgError:
            raise NewtonDiverged(f"Singular Jacobian at {x}!", NewtonReport(iteration, norm, False))

        # Damping by step halving
        damping = 1.0
        for _ in range(max_halvings + 1):
            f_new, norm_new = _evaluate(residual, x + damping * dx)
            if norm_new < norm:
                break
            damping /= 2
        else:
            raise NewtonDiverged(f"No residual decrease after {max_halvings} halvings (residual {norm:.3e})!",
                                 NewtonReport(iteration, norm, False))
        x, f, norm = x + damping * dx, f_new, norm_new

    raise NewtonDiverged(f"No convergence within {max_iter} iterations (residual {norm:.3e})!",
                         NewtonReport(max_iter, norm, False))
