import math
from typing import List

from carequeue_types import DelayKind, Scenario, Violation
from ..core.registry import DelayRegistry


def _finite(value: float) -> bool:
    return isinstance(value, (int, float)) and math.isfinite(value)


def _positive(value: float) -> bool:
    return _finite(value) and value > 0


def validate_scenario(s: Scenario) -> List[Violation]:
    """Every broken invariant of `s`; empty when the scenario is solvable."""
    violations: List[Violation] = []

    def violate(field: str, rule: str) -> None:
        violations.append(Violation(field=field, rule=rule))

    if not s.levels:
        violate("levels", "at least one facility level")
    if not s.classes:
        violate("classes", "at least one patient class")
    if not _positive(s.hours_per_year):
        violate("hours_per_year", "hours_per_year > 0 and finite")

    for name, ids in (
        ("levels", [level.id for level in s.levels]),
        ("classes", [c.id for c in s.classes]),
    ):
        if len(set(ids)) != len(ids):
            violate(name, "ids are unique")

    for k, patient_class in enumerate(s.classes):
        prefix = f"classes[{k}]"
        if not _positive(patient_class.arrival_rate):
            violate(f"{prefix}.arrival_rate", "arrival_rate > 0")
        if not _positive(patient_class.alpha):
            violate(f"{prefix}.alpha", "alpha > 0")
        if not _positive(patient_class.gumbel_scale):
            violate(f"{prefix}.gumbel_scale", "gumbel_scale > 0")
        if not _finite(patient_class.opt_out_utility):
            violate(f"{prefix}.opt_out_utility", "finite")

    for i, level in enumerate(s.levels):
        prefix = f"levels[{i}]"
        if not _positive(level.service_rate):
            violate(f"{prefix}.service_rate", "service_rate > 0")
        if level.servers < 1:
            violate(f"{prefix}.servers", "servers >= 1")
        if not (_finite(level.multiplier) and level.multiplier >= 1):
            violate(f"{prefix}.multiplier", "multiplier >= 1")
        if not _positive(level.capacity):
            violate(f"{prefix}.capacity", "capacity > 0")
        if not DelayRegistry.exists(level.kind):
            violate(f"{prefix}.kind", "registered delay kind")
        if level.kind is DelayKind.MM1 and level.servers != 1:
            violate(f"{prefix}.servers", "MM1 queues have one server")
        if _positive(level.service_rate) and not _positive(level.saturation):
            violate(f"{prefix}.saturation", "saturation finite and positive")

    if len(s.ref_utility) != len(s.classes):
        violate("ref_utility", "one row per class")
    for k, row in enumerate(s.ref_utility):
        if len(row) != len(s.levels):
            violate(f"ref_utility[{k}]", "one column per level")
        if not all(_finite(value) for value in row):
            violate(f"ref_utility[{k}]", "finite entries")

    if s.reference_waits is not None:
        if len(s.reference_waits) != len(s.levels):
            violate("reference_waits", "one wait per level")
        elif not all(_finite(value) for value in s.reference_waits):
            violate("reference_waits", "finite entries")

    if not s.opt_out_enabled:
        saturation = sum(level.saturation for level in s.levels)
        if not saturation > s.total_demand:
            violate(
                "levels",
                "non-saturation: total saturation > total demand without opt-out",
            )

    return violations
