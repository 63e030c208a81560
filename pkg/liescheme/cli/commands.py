"""Experiments of the command line interface

Every command reads an ExperimentConfig, writes its result file atomically and
returns the exit code.
"""

# Standard modules
import json
import math
from logging import Logger
from typing import Optional

# Local modules
from ..constants import EXIT_HALTED, EXIT_SUCCESS, Experiment
from ..core.errors import BlowUp
from ..diffapprox.closed_forms import approx_orders, first_approx_terms, leading_order
from ..diffapprox.comparison import compare_closed_form
from ..odes.curve import SolutionCurve
from ..odes.reference import reference_track
from ..schemes.stepper import RunResult, run, seed_from_initial_data
from ..utils import file
from ..utils import time
from .config import ExperimentConfig
from .suites import run_suites


# Zero test of the leading coefficient relative to ExpansionReport.scale
ZERO_THRESHOLD = 1e-6


def _number(value: float) -> str:
    return format(float(value), ".17g")


def _csv(config: ExperimentConfig, header: list[str], rows: list[list]) -> str:
    lines = [f"# config-digest: {config.digest()}", ",".join(header)]
    for row in rows:
        lines.append(",".join(value if isinstance(value, str) else
                              str(value) if isinstance(value, int) else _number(value) for value in row))
    return "\n".join(lines) + "\n"


def _log_duration(logger: Logger, experiment: Experiment):
    def result(duration: float) -> None:
        if logger:
            logger.info(f"Experiment '{experiment.value}' took {duration:.3f} s ...")
    return result


def _trajectory(config: ExperimentConfig, baseline: bool, logger: Logger = None) -> RunResult:
    spec = config.build_baseline() if baseline else config.build_scheme()
    seed = seed_from_initial_data(spec, spec.ode, config.initial_data(), config.eps, logger)
    return run(spec, seed, config.steps, logger)


def _errors(config: ExperimentConfig, trajectory: RunResult,
            logger: Logger = None) -> tuple[list[float], list[float], Optional[BlowUp]]:
    """Reference values and absolute errors along a trajectory, nan past a reference blow-up"""
    jets, failure = reference_track(config.build_ode(), config.initial_data(), trajectory.xs, config.reference_tol,
                                    logger)
    references = [jet.y if jet is not None else math.nan for jet in jets]
    return references, [abs(y - reference) for y, reference in zip(trajectory.ys, references)], failure


def _finite(values: list[float]) -> list[float]:
    return [value for value in values if math.isfinite(value)]


def _reach(name: str, trajectory: RunResult) -> str:
    if trajectory.completed:
        return f"The {name} run reached x={trajectory.xs[-1]:.6g}"
    return f"The {name} run halted at step {trajectory.halt_index} after x={trajectory.xs[-1]:.6g}: {trajectory.error}"


def _blowup(failure: BlowUp) -> str:
    where = f" near x={failure.x:.6g}" if failure.x is not None else ""
    return f"The reference solution blows up{where}: {failure}"


def cmd_solve(config: ExperimentConfig, logger: Logger = None) -> int:
    """Run the configured scheme and tabulate it against the reference solution"""

    with time.benchmark(_log_duration(logger, Experiment.SOLVE)):
        trajectory = _trajectory(config, False, logger)
        references, errors, failure = _errors(config, trajectory, logger)

        xs, ys = trajectory.xs, trajectory.ys
        rows = []
        for index, (x, y) in enumerate(zip(xs, ys)):
            iterations = trajectory.reports[index - 3].iterations if index >= 3 else 0
            h = xs[index] - xs[index - 1] if index > 0 else xs[1] - xs[0]
            rows.append([index, x, y, references[index], errors[index], iterations, h])
        path = config.output_path("csv")
        file.save_text(path, _csv(config, ["step", "x", "y", "y_ref", "abs_err", "newton_iters", "h"], rows), logger)

    if failure is not None:
        print(_blowup(failure))
    if trajectory.completed:
        print(f"{len(xs)} points written to '{path}', max abs error {max(_finite(errors), default=math.nan):.3e}")
        return EXIT_SUCCESS
    print(f"Run halted at step {trajectory.halt_index}: {trajectory.error}")
    return EXIT_HALTED


def _ratio(standard: float, invariant: float) -> float:
    if standard == 0 and invariant == 0:
        return 1.0
    if invariant == 0:
        return float("inf")
    return standard / invariant


def cmd_compare(config: ExperimentConfig, logger: Logger = None) -> int:
    """Errors of the invariant scheme against the standard baseline, matched by step index

    Runs toward a singularity report where each run halts and where the reference blows up.
    """

    with time.benchmark(_log_duration(logger, Experiment.COMPARE)):
        invariant = _trajectory(config, False, logger)
        standard = _trajectory(config, True, logger)
        _, invariant_errors, invariant_failure = _errors(config, invariant, logger)
        _, standard_errors, standard_failure = _errors(config, standard, logger)

        count = min(len(invariant_errors), len(standard_errors))
        ratios = [_ratio(standard_errors[i], invariant_errors[i]) for i in range(count)]
        rows = [[invariant.xs[i], invariant_errors[i], standard_errors[i], ratios[i]] for i in range(count)]
        path = config.output_path("csv")
        file.save_text(path, _csv(config, ["x", "err_invariant", "err_standard", "ratio"], rows), logger)

    finite = _finite(ratios)
    print(f"{count} points written to '{path}', error ratio max {max(finite, default=math.nan):.6g}, "
          f"final {ratios[-1]:.6g}")
    print(_reach("invariant", invariant))
    print(_reach("standard", standard))
    failure = invariant_failure or standard_failure
    if failure is not None:
        print(_blowup(failure))
    return EXIT_SUCCESS if invariant.completed and standard.completed else EXIT_HALTED


def cmd_diffapprox(config: ExperimentConfig, logger: Logger = None) -> int:
    """Fit the residual expansion on the exact solution and compare it with the closed forms"""

    with time.benchmark(_log_duration(logger, Experiment.DIFFAPPROX)):
        settings = config.approx_settings()
        scheme = config.build_scheme()
        curve = SolutionCurve(scheme.ode, config.initial_data(), logger=logger)
        comparison = compare_closed_form(settings.approx, curve, settings.direction, scheme, settings.eps0,
                                         settings.degree, settings.levels, logger=logger)
        printed = first_approx_terms(settings.approx, curve.jet, settings.direction.alpha, scheme, printed=True)

        report = comparison.report
        order = leading_order(settings.approx)
        leading = comparison.order(order)
        factor = comparison.normalization
        coefficient = report.coefficient(order)
        result = {
            **report.dict(),
            "id": settings.approx.value,
            "orders": list(approx_orders(settings.approx)),
            "leading_order": order,
            "closed_form_c1": leading.closed / factor,
            "printed_c1": float(printed[order]) / factor,
            "rel_gap": leading.gap,
            "threshold": ZERO_THRESHOLD * report.scale(coefficient),
            "below_threshold": abs(coefficient) <= ZERO_THRESHOLD * report.scale(coefficient),
            "normalization": factor,
            "gaps": [{"order": gap.order, "fitted": gap.fitted, "closed": gap.closed, "gap": gap.gap}
                     for gap in comparison.gaps],
            "config_digest": config.digest(),
        }
        path = config.output_path("json")
        file.save_json(path, result, logger)

    print(json.dumps({key: result[key] for key in ("id", "leading_order", "rel_gap", "below_threshold")}))
    return EXIT_SUCCESS


def cmd_invariance(config: ExperimentConfig, logger: Logger = None) -> int:
    """Run the invariance suites and write a text report"""

    with time.benchmark(_log_duration(logger, Experiment.INVARIANCE)):
        results = run_suites(config.invariance_settings(), config.seed, logger)
        lines = [f"# config-digest: {config.digest()}", f"# seed: {config.seed}"]
        for result in results:
            lines.append(result.summary())
            lines.extend(f"    {line}" for line in result.lines)
        path = config.output_path("txt")
        file.save_text(path, "\n".join(lines) + "\n", logger)

    failed: Optional[str] = next((result.name for result in results if not result.passed), None)
    for result in results:
        print(result.summary())
    if failed:
        return EXIT_HALTED
    return EXIT_SUCCESS


COMMANDS = {
    Experiment.SOLVE: cmd_solve,
    Experiment.COMPARE: cmd_compare,
    Experiment.DIFFAPPROX: cmd_diffapprox,
    Experiment.INVARIANCE: cmd_invariance,
}
