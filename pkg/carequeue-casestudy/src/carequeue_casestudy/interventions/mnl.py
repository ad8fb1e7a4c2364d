from typing import Optional

import numpy as np

from carequeue_types import (
    Equilibrium,
    EvaluationModel,
    InterventionSpec,
    Scenario,
    Violation,
)
from carequeue_core.core.config import settings
from carequeue_core.core.exceptions import SaturationError, ScenarioValidationError
from carequeue_core.equilibrium import choice_matrix, flows_from_choice
from carequeue_core.equilibrium.objective import delay_functions
from .apply import apply_intervention


def mnl_only_evaluate(
    s: Scenario, iv: InterventionSpec, feasibility_cap: Optional[float] = None
) -> Equilibrium:
    """
    Choice probabilities with waits held at the reference waits, and the
    waits those choices would cause without feedback.

    `s` is the scenario before the intervention; utilities use its waiting
    sensitivities, so alpha overrides leave the probabilities unchanged.
    Saturated levels get an infinite wait.
    """
    if s.reference_waits is None:
        raise ScenarioValidationError(
            [Violation(field="reference_waits", rule="required by the MNL model")]
        )
    cap = feasibility_cap if feasibility_cap is not None else settings.FEASIBILITY_CAP
    intervened = apply_intervention(s, iv)
    alphas = [c.alpha for c in s.classes]
    choice = choice_matrix(intervened, s.reference_waits, alphas)
    flows = flows_from_choice(intervened, choice)

    waits = []
    for delay, flow in zip(delay_functions(intervened), flows):
        try:
            waits.append(delay.wait(float(flow)))
        except SaturationError:
            waits.append(float("inf"))

    return Equilibrium(
        model=EvaluationModel.MNL_ONLY,
        waits=tuple(waits),
        flows=tuple(float(x) for x in flows),
        choice=tuple(tuple(float(p) for p in row) for row in choice),
        feasible=bool(np.all(np.asarray(waits) <= cap)),
    )
