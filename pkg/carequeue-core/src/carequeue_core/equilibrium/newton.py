import logging
from typing import Optional, Sequence

import numpy as np
from scipy.linalg import cho_solve

from carequeue_types import (
    Equilibrium,
    EvaluationModel,
    Scenario,
    SolverSettings,
    StartMode,
    Violation,
)
from ..core.config import settings as default_settings
from ..core.exceptions import (
    ConvergenceError,
    NonSaturationViolated,
    ScenarioValidationError,
)
from ..model.validation import validate_scenario
from .objective import ObjectiveEvaluation, delay_functions, evaluate
from .saturation import check_nonsaturation

logger = logging.getLogger(__name__)

ARMIJO_C1 = 1e-4
MIN_STEP = 1e-12


def initial_waits(s: Scenario, cfg: SolverSettings) -> np.ndarray:
    start = cfg.initial_waits
    if start == StartMode.REFERENCE:
        if s.reference_waits is not None:
            return np.asarray(s.reference_waits, dtype=float)
        logger.warning("Scenario has no reference waits, starting at zero flow")
        start = StartMode.ZERO_FLOW
    if start == StartMode.ZERO_FLOW:
        return np.asarray(s.zero_flow_waits, dtype=float)
    waits = np.asarray(start, dtype=float)
    if waits.shape != (s.n_levels,) or not np.all(np.isfinite(waits)):
        raise ScenarioValidationError(
            [Violation(field="initial_waits", rule="one finite wait per level")]
        )
    return waits


def ensure_solvable(s: Scenario) -> None:
    if not s.opt_out_enabled:
        check = check_nonsaturation(s)
        if not check.holds:
            raise NonSaturationViolated(check.margin)
    violations = validate_scenario(s)
    if violations:
        raise ScenarioValidationError(violations)


def equilibrium_from(
    s: Scenario, point: ObjectiveEvaluation, cap: float, iterations: int
) -> Equilibrium:
    return Equilibrium(
        model=EvaluationModel.EQUILIBRIUM,
        waits=tuple(float(w) for w in point.waits),
        flows=tuple(float(x) for x in point.flows),
        choice=tuple(tuple(float(p) for p in row) for row in point.choice),
        objective=point.theta,
        grad_norm=point.grad_norm,
        feasible=bool(np.all(point.waits <= cap)),
        iterations=iterations,
    )


def solve(s: Scenario, cfg: Optional[SolverSettings] = None) -> Equilibrium:
    """
    Minimize the equilibrium objective by damped Newton with Armijo
    backtracking. Steps fall back to steepest descent when the Hessian is not
    numerically positive definite.
    """
    cfg = cfg if cfg is not None else default_settings.solver_settings()
    ensure_solvable(s)

    delays = delay_functions(s)
    point = evaluate(s, initial_waits(s, cfg), delays)
    slack = 8.0 * np.finfo(float).eps

    for iteration in range(cfg.max_iters + 1):
        if point.grad_norm <= cfg.grad_tol:
            logger.debug(
                "Converged after %d iterations, grad_norm=%.3e",
                iteration,
                point.grad_norm,
            )
            return equilibrium_from(s, point, cfg.feasibility_cap, iteration)
        if iteration == cfg.max_iters:
            break

        factor = point.hessian_factor()
        if factor is not None:
            direction = -cho_solve(factor, point.gradient)
        else:
            logger.debug("Hessian not positive definite, taking a gradient step")
            direction = -point.gradient / np.max(np.abs(point.gradient))

        slope = float(point.gradient @ direction)
        step = 1.0
        while True:
            candidate = evaluate(s, point.waits + step * direction, delays)
            allowed = (
                point.theta
                + ARMIJO_C1 * step * slope
                + slack * abs(point.theta)
            )
            if candidate.theta <= allowed:
                break
            step *= 0.5
            if step < MIN_STEP:
                raise ConvergenceError(
                    f"Line search stalled at grad_norm={point.grad_norm:.3e}",
                    iteration,
                    point.grad_norm,
                )
        point = candidate

    raise ConvergenceError(
        f"No convergence within {cfg.max_iters} iterations "
        f"(grad_norm={point.grad_norm:.3e}, tolerance {cfg.grad_tol:.1e})",
        cfg.max_iters,
        point.grad_norm,
    )


def solve_from(
    s: Scenario, waits: Sequence[float], cfg: Optional[SolverSettings] = None
) -> Equilibrium:
    """solve() started at explicit waits."""
    cfg = cfg if cfg is not None else default_settings.solver_settings()
    return solve(s, cfg.model_copy(update={"initial_waits": tuple(waits)}))
