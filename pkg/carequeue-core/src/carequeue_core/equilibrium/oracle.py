import logging
from typing import List, Optional, Sequence

import numpy as np

from carequeue_types import Equilibrium, Scenario, SolverSettings, StartMode
from ..core.exceptions import ConvergenceError, SaturationError
from .newton import ensure_solvable, equilibrium_from, initial_waits
from .objective import choice_matrix, delay_functions, evaluate, flows_from_choice

logger = logging.getLogger(__name__)

DIVERGENCE_WINDOW = 50
DIVERGENCE_GROWTH = 10.0


def fixed_point_oracle(
    s: Scenario,
    damping: float = 0.3,
    iters: int = 2000,
    initial: Optional[Sequence[float]] = None,
    tol: float = 1e-12,
    wait_cap: float = 1000.0,
    feasibility_cap: float = 10.0,
) -> Equilibrium:
    """
    Iterate w <- (1 - damping) w + damping * wait(flows(choice(w))) until the
    residual max|wait(flows(w)) - w| drops below tol * max(1, max|w|).

    Saturated levels map to `wait_cap` hours. Independent of the objective
    minimizer and meant for cross-checking it.
    """
    if not 0.0 < damping <= 1.0:
        raise ValueError(f"damping must lie in (0, 1], got {damping}")
    ensure_solvable(s)
    delays = delay_functions(s)

    def mapped(w: np.ndarray) -> np.ndarray:
        flows = flows_from_choice(s, choice_matrix(s, w))
        out = np.empty_like(w)
        for i, (delay, flow) in enumerate(zip(delays, flows)):
            try:
                out[i] = min(delay.wait(float(flow)), wait_cap)
            except SaturationError:
                out[i] = wait_cap
        return out

    if initial is None:
        w = initial_waits(s, SolverSettings(initial_waits=StartMode.ZERO_FLOW))
    else:
        w = np.asarray(initial, dtype=float)
    residuals: List[float] = []

    for iteration in range(1, iters + 1):
        target = mapped(w)
        w = (1.0 - damping) * w + damping * target
        residual = float(np.max(np.abs(mapped(w) - w)))
        residuals.append(residual)

        if residual <= tol * max(1.0, float(np.max(np.abs(w)))):
            logger.debug("Fixed point reached after %d iterations", iteration)
            point = evaluate(s, w, delays, with_hessian=False)
            return equilibrium_from(s, point, feasibility_cap, iteration)

        if len(residuals) > DIVERGENCE_WINDOW:
            earlier = residuals[-DIVERGENCE_WINDOW - 1]
            if residual > DIVERGENCE_GROWTH * earlier:
                raise ConvergenceError(
                    f"Fixed-point iteration diverges: residual {residual:.3e} "
                    f"after {iteration} iterations, {earlier:.3e} "
                    f"{DIVERGENCE_WINDOW} iterations earlier",
                    iteration,
                    residual,
                )

    raise ConvergenceError(
        f"Fixed-point iteration did not converge in {iters} iterations "
        f"(residual {residuals[-1]:.3e})",
        iters,
        residuals[-1],
    )


def fixed_point_residual(s: Scenario, waits: Sequence[float]) -> float:
    """max_i |wait_i(flows(w)) - w_i| without damping or capping."""
    w = np.asarray(waits, dtype=float)
    flows = flows_from_choice(s, choice_matrix(s, w))
    delays = delay_functions(s)
    gaps = [abs(d.wait(float(x)) - wi) for d, x, wi in zip(delays, flows, w)]
    return float(max(gaps))
