import math
from typing import List

from carequeue_types import InterventionSpec, Scenario, Violation
from carequeue_core.core.exceptions import ScenarioValidationError

REVERT_TOLERANCE = 1e-12


def intervention_violations(s: Scenario, iv: InterventionSpec) -> List[Violation]:
    """Edits naming unknown classes or levels, or carrying unusable values."""
    class_ids = {c.id for c in s.classes}
    level_ids = {level.id for level in s.levels}
    violations: List[Violation] = []

    for class_id, row in iv.utility_deltas.items():
        if class_id not in class_ids:
            violations.append(
                Violation(field=f"utility_deltas[{class_id}]", rule="known class")
            )
        for level_id, delta in row.items():
            field = f"utility_deltas[{class_id}][{level_id}]"
            if level_id not in level_ids:
                violations.append(Violation(field=field, rule="known level"))
            if not math.isfinite(delta):
                violations.append(Violation(field=field, rule="finite"))
    for name, overrides in (
        ("opt_out_overrides", iv.opt_out_overrides),
        ("alpha_overrides", iv.alpha_overrides),
    ):
        for class_id, value in overrides.items():
            field = f"{name}[{class_id}]"
            if class_id not in class_ids:
                violations.append(Violation(field=field, rule="known class"))
            if not math.isfinite(value):
                violations.append(Violation(field=field, rule="finite"))
            elif name == "alpha_overrides" and value <= 0:
                violations.append(Violation(field=field, rule="alpha > 0"))
    return violations


def _check(s: Scenario, iv: InterventionSpec) -> None:
    violations = intervention_violations(s, iv)
    if violations:
        raise ScenarioValidationError(
            violations, f"Intervention '{iv.name}' does not fit the scenario"
        )


def apply_intervention(s: Scenario, iv: InterventionSpec) -> Scenario:
    """
    New scenario with the utility deltas added and the overrides in place.
    Reference utilities are not rebuilt when alpha changes.
    """
    _check(s, iv)
    level_index = {level.id: i for i, level in enumerate(s.levels)}
    rows = [list(row) for row in s.ref_utility]
    for class_id, deltas in iv.utility_deltas.items():
        k = s.class_index(class_id)
        for level_id, delta in deltas.items():
            rows[k][level_index[level_id]] += delta

    classes = []
    for patient_class in s.classes:
        update = {}
        if patient_class.id in iv.opt_out_overrides:
            update["opt_out_utility"] = iv.opt_out_overrides[patient_class.id]
        if patient_class.id in iv.alpha_overrides:
            update["alpha"] = iv.alpha_overrides[patient_class.id]
        classes.append(patient_class.model_copy(update=update))

    return s.model_copy(
        update={
            "classes": tuple(classes),
            "ref_utility": tuple(tuple(row) for row in rows),
        }
    )


def revert_intervention(
    s: Scenario, iv: InterventionSpec, original: Scenario
) -> Scenario:
    """
    Undo `iv` on `s`, restoring the values `original` held before it was
    applied. Fails when `s` is not `original` with `iv` applied.
    """
    _check(original, iv)
    expected = apply_intervention(original, iv)
    mismatched = [
        Violation(field=f"ref_utility[{k}]", rule="matches the intervened scenario")
        for k, (row, other) in enumerate(zip(s.ref_utility, expected.ref_utility))
        if any(abs(a - b) > REVERT_TOLERANCE for a, b in zip(row, other))
    ]
    if s.model_copy(update={"ref_utility": expected.ref_utility}) != expected:
        mismatched.append(
            Violation(field="scenario", rule="matches the intervened scenario")
        )
    if mismatched:
        raise ScenarioValidationError(
            mismatched, f"Scenario is not '{iv.name}' applied to the original"
        )
    return original
