"""Classic fourth order Runge-Kutta reference integration with step halving"""

# Standard modules
import math
from logging import Logger
from typing import Iterable, Optional

# External modules
import numpy as np

# Local modules
from ..constants import BLOWUP_LIMIT, MIN_STEP, REFERENCE_INITIAL_STEP, REFERENCE_MAX_STEPS, REFERENCE_STALL_LEVELS
from ..core.errors import BlowUp
from ..core.jet import Jet3
from .spec import InitialData, OdeSpec, rhs


def _field(spec: OdeSpec, x: float, state: np.ndarray) -> np.ndarray:
    return np.array([state[1], state[2], rhs(spec, x, state[0], state[1], state[2])])


def _rk4(spec: OdeSpec, x: float, state: np.ndarray, x_end: float, n_steps: int,
         trajectory: bool = False) -> list[np.ndarray]:
    """Fixed step integration, returning every state or only the final one"""
    h = (x_end - x) / n_steps
    states = [state]
    for i in range(n_steps):
        xi = x + i * h
        k1 = _field(spec, xi, state)
        k2 = _field(spec, xi + h / 2, state + h / 2 * k1)
        k3 = _field(spec, xi + h / 2, state + h / 2 * k2)
        k4 = _field(spec, xi + h, state + h * k3)
        state = state + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        if not np.all(np.isfinite(state)) or max(abs(state[0]), abs(state[1])) > BLOWUP_LIMIT:
            raise BlowUp(f"Solution exceeds {BLOWUP_LIMIT:g} near x={xi + h}!", xi + h)
        if trajectory:
            states.append(state)
    return states if trajectory else [state]


def _jet(spec: OdeSpec, x: float, state: np.ndarray) -> Jet3:
    y, y1, y2 = (float(v) for v in state)
    return Jet3(x, y, y1, y2, rhs(spec, x, y, y1, y2))


def rk4_integrate(spec: OdeSpec, j: Jet3, x_end: float, n_steps: int) -> Jet3:
    """Fixed step integration from a jet to x_end, the jet's y''' is not used"""
    if n_steps < 1:
        raise ValueError(f"Need at least one step, got {n_steps}!")
    state = np.array([j.y, j.y1, j.y2], dtype=float)
    return _jet(spec, x_end, _rk4(spec, j.x, state, x_end, n_steps)[-1])


def _segment(spec: OdeSpec, x: float, state: np.ndarray, x_end: float, tol: float,
             logger: Logger = None, trajectory: bool = False) -> tuple[list[float], list[np.ndarray]]:
    """Halve the step until two levels agree at x_end within tol per unit interval

    Raises BlowUp when the step underflows, the step count passes REFERENCE_MAX_STEPS or the
    change between levels stops halving for REFERENCE_STALL_LEVELS levels in a row.
    """

    span = x_end - x
    n_steps = max(1, math.ceil(abs(span) / REFERENCE_INITIAL_STEP))
    previous = _rk4(spec, x, state, x_end, n_steps)[-1]
    last_change, stalled = math.inf, 0
    while True:
        n_steps *= 2
        if abs(span) / n_steps < MIN_STEP:
            raise BlowUp(f"Step size underflow below {MIN_STEP:g} on [{x}, {x_end}]!", x_end)
        if n_steps > REFERENCE_MAX_STEPS:
            raise BlowUp(f"Refinement needs more than {REFERENCE_MAX_STEPS} steps on [{x}, {x_end}]!", x_end)
        current = _rk4(spec, x, state, x_end, n_steps)[-1]
        change = float(np.max(np.abs(current - previous)))
        if change <= tol * max(1.0, abs(span)):
            if logger:
                logger.debug(f"Reference segment [{x:.6g}, {x_end:.6g}] accepted with {n_steps} steps ...")
            if not trajectory:
                return [x_end], [current]
            return [x + i * span / n_steps for i in range(n_steps + 1)], _rk4(spec, x, state, x_end, n_steps, True)
        stalled = stalled + 1 if change > last_change / 2 else 0
        if stalled >= REFERENCE_STALL_LEVELS:
            raise BlowUp(f"Refinement stalled at change {change:.3e} above tol {tol:g} on [{x}, {x_end}]!", x_end)
        last_change, previous = change, current


def reference_solve(spec: OdeSpec, init: InitialData, x_target: float, tol: float = 1e-10,
                    logger: Logger = None) -> tuple[Jet3, ...]:
    """Trajectory of jets from x0 to x_target on the accepted refinement level

    spec: the ODE
    init: initial data at x0
    x_target: end of the integration, may lie left of x0
    tol: agreement of two refinement levels per unit interval
    logger: the logger to log information
    """

    start = init.jet(spec)
    if x_target == init.x0:
        return (start,)
    if logger:
        logger.debug(f"Reference integration from {init.x0} to {x_target} (tol {tol:g}) ...")
    state = np.array([init.y0, init.y1, init.y2], dtype=float)
    xs, states = _segment(spec, init.x0, state, x_target, tol, logger, trajectory=True)
    return (start,) + tuple(_jet(spec, x, s) for x, s in zip(xs[1:], states[1:]))


def reference_track(spec: OdeSpec, init: InitialData, xs: Iterable[float], tol: float = 1e-12,
                    logger: Logger = None) -> tuple[list[Optional[Jet3]], Optional[BlowUp]]:
    """Reference jets at arbitrary abscissas, None past the first blow-up on either side

    Integrates segment by segment outward from x0 and returns the jets together with the
    BlowUp that stopped the integration, if any.
    """

    xs = list(xs)
    result: dict[int, Jet3] = {}
    failure: Optional[BlowUp] = None
    for side in (1, -1):
        order = sorted((i for i, x in enumerate(xs) if (x - init.x0) * side >= 0), key=lambda i: xs[i] * side)
        x, state = init.x0, np.array([init.y0, init.y1, init.y2], dtype=float)
        for i in order:
            if xs[i] != x:
                try:
                    _, states = _segment(spec, x, state, xs[i], tol, logger)
                except BlowUp as error:
                    if logger:
                        logger.warning(f"Reference integration stopped after x={x}: {error} ...")
                    failure = failure or error
                    break
                x, state = xs[i], states[-1]
            result[i] = _jet(spec, x, state)
    return [result.get(i) for i in range(len(xs))], failure


def reference_values(spec: OdeSpec, init: InitialData, xs: Iterable[float], tol: float = 1e-12,
                     logger: Logger = None) -> list[Jet3]:
    """Reference jets at arbitrary abscissas, raising BlowUp when one is out of reach"""
    jets, failure = reference_track(spec, init, xs, tol, logger)
    if failure is not None:
        raise failure
    return jets
