import logging
import math
from typing import List, Optional, Tuple

from carequeue_types import (
    AttributeUtilities,
    CalibrationResult,
    DelayKind,
    FacilityLevel,
    FacilityTable,
    PatientClass,
    Scenario,
    Violation,
)
from carequeue_core.core.exceptions import ScenarioValidationError
from .calibration import apply_calibration, calibrate
from .tables import load_attribute_utilities, load_facility_table

logger = logging.getLogger(__name__)

EFFECTS_TOLERANCE = 1e-9


def effects_coding_violations(
    data: AttributeUtilities, table: Optional[FacilityTable] = None
) -> List[Violation]:
    """
    Attribute utilities are effects coded: each skill and equipment triple
    sums to zero, so the middle value is minus the sum of the other two.
    """
    violations: List[Violation] = []
    for k, attributes in enumerate(data.classes):
        for attribute, values in (
            ("skill", attributes.skill),
            ("equipment", attributes.equipment),
        ):
            if abs(math.fsum(values.values())) > EFFECTS_TOLERANCE:
                violations.append(
                    Violation(
                        field=f"classes[{k}].{attribute}",
                        rule="effects coding: utilities sum to zero",
                    )
                )
    shares = math.fsum(c.demand_share for c in data.classes)
    if abs(shares - 1.0) > EFFECTS_TOLERANCE:
        violations.append(Violation(field="classes", rule="demand shares sum to 1"))

    if table is not None:
        for i, level in enumerate(table.levels):
            for k, attributes in enumerate(data.classes):
                if attributes.id not in level.zero_wait_utility:
                    violations.append(
                        Violation(
                            field=f"levels[{i}].zero_wait_utility",
                            rule=f"utility for class '{attributes.id}'",
                        )
                    )
                if level.skill_level not in attributes.skill:
                    violations.append(
                        Violation(
                            field=f"classes[{k}].skill",
                            rule=f"utility for skill '{level.skill_level}'",
                        )
                    )
                if level.equipment_status not in attributes.equipment:
                    violations.append(
                        Violation(
                            field=f"classes[{k}].equipment",
                            rule=f"utility for equipment '{level.equipment_status}'",
                        )
                    )
    return violations


def build_baseline(
    data: AttributeUtilities,
    table: FacilityTable,
    hours_per_year: Optional[float] = None,
) -> Scenario:
    """
    Assemble the case-study scenario from the attribute and facility tables.

    Reference utilities are shifted so that utilities at the reference waits
    equal the table's zero-wait utilities: ref = table + alpha * w_ref.
    Capacities are nominal (facilities x doctors x first-visit fraction x
    hours per year); calibrate() adjusts them.
    """
    violations = effects_coding_violations(data, table)
    if violations:
        raise ScenarioValidationError(violations)

    hours = hours_per_year if hours_per_year is not None else table.hours_per_year
    reference_waits = tuple(level.reference_wait for level in table.levels)

    levels = tuple(
        FacilityLevel(
            id=level.id,
            service_rate=level.service_rate,
            servers=1,
            multiplier=level.multiplier,
            capacity=level.nominal_capacity(hours),
            kind=DelayKind.MM1,
            wait_measure=table.wait_measure,
        )
        for level in table.levels
    )
    classes = tuple(
        PatientClass(
            id=attributes.id,
            arrival_rate=attributes.demand_share * data.total_demand,
            alpha=attributes.alpha,
            opt_out_utility=attributes.opt_out_utility,
        )
        for attributes in data.classes
    )
    ref_utility = tuple(
        tuple(
            level.zero_wait_utility[attributes.id] + attributes.alpha * w
            for level, w in zip(table.levels, reference_waits)
        )
        for attributes in data.classes
    )
    return Scenario(
        levels=levels,
        classes=classes,
        ref_utility=ref_utility,
        hours_per_year=hours,
        reference_waits=reference_waits,
    )


def load_case_study(
    calibrated: bool = True,
) -> Tuple[Scenario, Optional[CalibrationResult]]:
    """The bundled case-study scenario, calibrated unless asked otherwise."""
    scenario = build_baseline(load_attribute_utilities(), load_facility_table())
    if not calibrated:
        return scenario, None
    result = calibrate(scenario)
    return apply_calibration(scenario, result), result
