"""
carequeue case study - urban outpatient care: bundled data, calibration,
interventions and the paired sensitivity harness.
"""

from .baseline import build_baseline, effects_coding_violations, load_case_study
from .calibration import apply_calibration, calibrate
from .interventions import (
    BASELINE,
    InterventionRegistry,
    apply_intervention,
    builtin_interventions,
    mnl_only_evaluate,
    resolve_intervention,
    revert_intervention,
)
from .tables import (
    bundled_path,
    load_attribute_utilities,
    load_facility_table,
    load_intervention_specs,
)

__version__ = "0.1.0"
__all__ = [
    "BASELINE",
    "InterventionRegistry",
    "apply_calibration",
    "apply_intervention",
    "build_baseline",
    "builtin_interventions",
    "bundled_path",
    "calibrate",
    "effects_coding_violations",
    "load_attribute_utilities",
    "load_case_study",
    "load_facility_table",
    "load_intervention_specs",
    "mnl_only_evaluate",
    "resolve_intervention",
    "revert_intervention",
]
