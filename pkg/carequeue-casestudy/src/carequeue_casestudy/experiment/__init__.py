from .harness import (
    evaluate_instance,
    outcome_variables,
    run_paired_study,
    unperturbed_outcome,
)
from .report import (
    build_report,
    load_study,
    render_comparison,
    render_csv,
    render_table,
    rows_from_outcome,
    save_study,
)
from .sampling import identity_sample, perturb_scenario, sample_perturbations
from .significance import (
    nonzero_test,
    paired_differences,
    sign_test,
    sign_thresholds,
    significance,
)

__all__ = [
    "build_report",
    "evaluate_instance",
    "identity_sample",
    "load_study",
    "nonzero_test",
    "outcome_variables",
    "paired_differences",
    "perturb_scenario",
    "render_comparison",
    "render_csv",
    "render_table",
    "rows_from_outcome",
    "run_paired_study",
    "save_study",
    "sample_perturbations",
    "sign_test",
    "sign_thresholds",
    "significance",
    "unperturbed_outcome",
]
