import logging
from typing import Optional, Sequence

import numpy as np

from carequeue_types import (
    CalibrationResult,
    DelayModel,
    Scenario,
    SolverSettings,
    Violation,
)
from carequeue_core.core.exceptions import CalibrationError, ScenarioValidationError
from carequeue_core.equilibrium import choice_matrix, flows_from_choice, solve
from carequeue_core.queueing.delay import delay_function

logger = logging.getLogger(__name__)

# Stable per-queue rates stay below this fraction of the queue saturation
STABLE_FRACTION = 1.0 - 1e-12
# Calibration residuals are reported against a tighter solve than the default
RESIDUAL_GRAD_TOL = 1e-13


def _reference_waits(s: Scenario, w_ref: Optional[Sequence[float]]) -> np.ndarray:
    waits = w_ref if w_ref is not None else s.reference_waits
    if waits is None or len(waits) != s.n_levels:
        raise ScenarioValidationError(
            [Violation(field="reference_waits", rule="one reference wait per level")]
        )
    return np.asarray(waits, dtype=float)


def calibrate(
    s: Scenario, w_ref: Optional[Sequence[float]] = None
) -> CalibrationResult:
    """
    Capacity factors that make the reference waits the equilibrium of `s`.

    Choice probabilities at the reference waits fix the annual flows; the
    delay function inverted at each reference wait gives the per-queue rate
    those flows must produce, hence the capacity. The result is an exact fit
    whose residual comes from an independent solve of the calibrated scenario.
    """
    waits = _reference_waits(s, w_ref)
    flows = flows_from_choice(s, choice_matrix(s, waits))

    rates, factors = [], []
    for level, wait, flow in zip(s.levels, waits, flows):
        unit = DelayModel.from_level(level, s.hours_per_year).model_copy(
            update={"capacity": 1.0}
        )
        delay = delay_function(unit)
        rate = delay.inverse_wait(float(wait))
        ceiling = delay.queue_saturation * STABLE_FRACTION
        if not 0.0 < rate < ceiling:
            raise CalibrationError(level.id, rate, delay.queue_saturation)
        rates.append(rate)
        factors.append(float(flow) / rate / level.capacity)
        logger.debug(
            "Level %s: flow %.6g/year, rate %.6g/h, factor %.9f",
            level.id,
            flow,
            rate,
            factors[-1],
        )

    partial = CalibrationResult(
        mild_share=s.classes[0].arrival_rate / s.total_demand,
        capacity_factors=tuple(factors),
        required_rates=tuple(rates),
        reference_waits=tuple(float(w) for w in waits),
        residual=0.0,
    )
    eq = solve(
        apply_calibration(s, partial), SolverSettings(grad_tol=RESIDUAL_GRAD_TOL)
    )
    residual = float(np.max(np.abs(np.asarray(eq.waits) - waits)))
    return partial.model_copy(update={"residual": residual})


def apply_calibration(s: Scenario, result: CalibrationResult) -> Scenario:
    """Scale each level's capacity by its calibration factor."""
    if len(result.capacity_factors) != s.n_levels:
        raise ScenarioValidationError(
            [Violation(field="capacity_factors", rule="one factor per level")]
        )
    levels = tuple(
        level.model_copy(update={"capacity": level.capacity * factor})
        for level, factor in zip(s.levels, result.capacity_factors)
    )
    return s.model_copy(update={"levels": levels})
