from typing import Dict, Tuple

from carequeue_types import AttributeUtilities, FacilityTable, InterventionSpec
from .base import Intervention

UPGRADED_LEVELS = ("primary", "secondary")


def attribute_deltas(
    data: AttributeUtilities,
    table: FacilityTable,
    attribute: str,
    target: str,
    levels: Tuple[str, ...],
) -> Dict[str, Dict[str, float]]:
    """
    Utility change per class and level when the levels' `attribute`
    ('skill' or 'equipment') moves to `target`. Levels already at the target
    get no entry.
    """
    deltas: Dict[str, Dict[str, float]] = {}
    for attributes in data.classes:
        utilities = getattr(attributes, attribute)
        row: Dict[str, float] = {}
        for level in table.levels:
            if level.id not in levels:
                continue
            current = (
                level.skill_level if attribute == "skill" else level.equipment_status
            )
            if current != target:
                row[level.id] = utilities[target] - utilities[current]
        if row:
            deltas[attributes.id] = row
    return deltas


class SkillIntervention(Intervention):
    TARGET_SKILL = "expert"
    LEVELS: Tuple[str, ...] = UPGRADED_LEVELS

    @classmethod
    def category(cls) -> str:
        return "Supply"

    def build(self, data: AttributeUtilities, table: FacilityTable) -> InterventionSpec:
        return InterventionSpec(
            name=self.name(),
            description=self.documentation(),
            utility_deltas=attribute_deltas(
                data, table, "skill", self.TARGET_SKILL, self.LEVELS
            ),
        )


class Upskill(SkillIntervention):
    """Train primary and secondary care physicians to expert level."""

    @classmethod
    def name(cls) -> str:
        return "Upskill"


class UpskillToSenior(SkillIntervention):
    """Train primary care physicians to senior level only."""

    TARGET_SKILL = "senior"
    LEVELS = ("primary",)

    @classmethod
    def name(cls) -> str:
        return "UpskillToSenior"


class Upgrade(Intervention):
    """Equip primary and secondary care facilities with advanced equipment."""

    @classmethod
    def name(cls) -> str:
        return "Upgrade"

    @classmethod
    def category(cls) -> str:
        return "Supply"

    def build(self, data: AttributeUtilities, table: FacilityTable) -> InterventionSpec:
        return InterventionSpec(
            name=self.name(),
            description=self.documentation(),
            utility_deltas=attribute_deltas(
                data, table, "equipment", "advanced", UPGRADED_LEVELS
            ),
        )
