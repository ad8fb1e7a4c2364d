from .apply import apply_intervention, intervention_violations, revert_intervention
from .base import Intervention
from .combined import CombinedIntervention, combine_specs
from .mnl import mnl_only_evaluate
from .registry import (
    BASELINE,
    InterventionRegistry,
    builtin_interventions,
    resolve_intervention,
)

__all__ = [
    "BASELINE",
    "CombinedIntervention",
    "Intervention",
    "InterventionRegistry",
    "apply_intervention",
    "builtin_interventions",
    "combine_specs",
    "intervention_violations",
    "mnl_only_evaluate",
    "resolve_intervention",
    "revert_intervention",
]
