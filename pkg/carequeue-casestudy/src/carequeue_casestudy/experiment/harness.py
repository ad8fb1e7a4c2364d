import logging
import math
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat
from typing import List, Optional, Sequence
from uuid import uuid4

from carequeue_types import (
    Equilibrium,
    InterventionSpec,
    PairedOutcome,
    PerturbationSample,
    Scenario,
    SolverSettings,
    VariableOutcome,
)
from carequeue_core.core.config import settings as default_settings
from carequeue_core.core.exceptions import NumericalError
from carequeue_core.core.logger import Logger
from carequeue_core.equilibrium import solve
from ..interventions import apply_intervention, mnl_only_evaluate
from .sampling import identity_sample, perturb_scenario

logger = logging.getLogger(__name__)


def _class_labels(s: Scenario) -> List[str]:
    initials = [c.id[:1].upper() for c in s.classes]
    if len(set(initials)) == len(initials):
        return initials
    return [c.id for c in s.classes]


def outcome_variables(s: Scenario) -> List[str]:
    """
    Row labels: P(OO|M), P(1|M), ... per class, then W(1), W(2), ... Classes
    are labelled by their initial when initials are unique.
    """
    labels = []
    for label in _class_labels(s):
        labels.append(f"P(OO|{label})")
        labels.extend(f"P({i}|{label})" for i in range(1, s.n_levels + 1))
    labels.extend(f"W({i})" for i in range(1, s.n_levels + 1))
    return labels


def _flatten(result: Equilibrium) -> List[Optional[float]]:
    values: List[Optional[float]] = [p for row in result.choice for p in row]
    values.extend(w if math.isfinite(w) else None for w in result.waits)
    return values


def evaluate_instance(
    s: Scenario,
    iv: InterventionSpec,
    sample: PerturbationSample,
    cfg: SolverSettings,
) -> PairedOutcome:
    """Both models on the same perturbed scenario."""
    perturbed = perturb_scenario(s, sample)
    variables = outcome_variables(s)
    mnl = mnl_only_evaluate(perturbed, iv, cfg.feasibility_cap)

    eq: Optional[Equilibrium] = None
    failure = None
    try:
        eq = solve(apply_intervention(perturbed, iv), cfg)
    except NumericalError as e:
        failure = str(e)

    mnl_values = _flatten(mnl)
    eq_values = _flatten(eq) if eq is not None else [None] * len(variables)
    paired = mnl.feasible and eq is not None and eq.feasible
    values = tuple(
        VariableOutcome(
            variable=variable,
            mnl_value=m,
            equilibrium_value=e,
            difference=e - m if paired and m is not None and e is not None else None,
        )
        for variable, m, e in zip(variables, mnl_values, eq_values)
    )
    return PairedOutcome(
        index=sample.index,
        seed=sample.seed,
        fingerprint=perturbed.fingerprint(),
        values=values,
        feasible_mnl=mnl.feasible,
        feasible_eq=eq is not None and eq.feasible,
        failure=failure,
    )


def unperturbed_outcome(
    s: Scenario, iv: InterventionSpec, cfg: Optional[SolverSettings] = None
) -> PairedOutcome:
    cfg = cfg if cfg is not None else default_settings.solver_settings()
    return evaluate_instance(s, iv, identity_sample(s.n_levels), cfg)


def run_paired_study(
    s: Scenario,
    iv: InterventionSpec,
    samples: Sequence[PerturbationSample],
    cfg: Optional[SolverSettings] = None,
    workers: Optional[int] = None,
    run_id: Optional[str] = None,
) -> List[PairedOutcome]:
    """
    Evaluate the MNL-only model and the equilibrium on every perturbed
    instance. Solver failures are recorded on the outcome and the run goes
    on. Results come back in sample order whatever the number of workers.
    """
    cfg = cfg if cfg is not None else default_settings.solver_settings()
    workers = workers if workers is not None else default_settings.WORKERS
    run_id = run_id or str(uuid4())

    Logger.pending(
        run_id,
        {
            "message": f"Paired study of '{iv.name}' on {len(samples)} instances",
            "intervention": iv.name,
            "instances": len(samples),
            "workers": workers,
        },
    )
    args = (repeat(s), repeat(iv), samples, repeat(cfg))
    parallel = workers > 1 and len(samples) > 1
    Logger.running(
        run_id,
        {
            "message": f"Evaluating {len(samples)} instances",
            "mode": "parallel" if parallel else "serial",
        },
    )
    if parallel:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            outcomes = list(executor.map(evaluate_instance, *args, chunksize=16))
    else:
        outcomes = list(map(evaluate_instance, *args))

    for outcome in outcomes:
        if outcome.failure:
            Logger.warn(
                run_id,
                {
                    "message": f"Instance {outcome.index} dropped: {outcome.failure}",
                    "index": outcome.index,
                    "seed": outcome.seed,
                },
            )
    failures = sum(o.failure is not None for o in outcomes)
    summary = {
        "message": f"Paired study of '{iv.name}' finished",
        "feasible_mnl": sum(o.feasible_mnl for o in outcomes),
        "feasible_eq": sum(o.feasible_eq for o in outcomes),
        "failures": failures,
    }
    # SUCCESS only when every instance solved; dropped instances end as COMPLETED
    if failures:
        Logger.completed(run_id, summary)
    else:
        Logger.success(run_id, summary)
    return outcomes
