from typing import Dict, Tuple, Type

from carequeue_types import AttributeUtilities, FacilityTable, InterventionSpec
from .attributes import Upgrade, Upskill
from .base import Intervention
from .behaviour import HealthPromotion, UniformWaitSensitivity


def combine_specs(name: str, *specs: InterventionSpec) -> InterventionSpec:
    """Sum utility deltas; later overrides replace earlier ones."""
    deltas: Dict[str, Dict[str, float]] = {}
    opt_out: Dict[str, float] = {}
    alphas: Dict[str, float] = {}
    for spec in specs:
        for class_id, row in spec.utility_deltas.items():
            merged = deltas.setdefault(class_id, {})
            for level_id, delta in row.items():
                merged[level_id] = merged.get(level_id, 0.0) + delta
        opt_out.update(spec.opt_out_overrides)
        alphas.update(spec.alpha_overrides)
    return InterventionSpec(
        name=name,
        description=" + ".join(spec.name for spec in specs),
        utility_deltas=deltas,
        opt_out_overrides=opt_out,
        alpha_overrides=alphas,
    )


class CombinedIntervention(Intervention):
    PARTS: Tuple[Type[Intervention], ...] = ()
    SEPARATOR = "+"

    @classmethod
    def name(cls) -> str:
        return cls.SEPARATOR.join(part.name() for part in cls.PARTS)

    @classmethod
    def category(cls) -> str:
        categories = {part.category() for part in cls.PARTS}
        return categories.pop() if len(categories) == 1 else "Combined"

    def build(self, data: AttributeUtilities, table: FacilityTable) -> InterventionSpec:
        specs = [part().build(data, table) for part in self.PARTS]
        return combine_specs(self.name(), *specs)


class UpskillAndUpgrade(CombinedIntervention):
    """Upskill and Upgrade together."""

    PARTS = (Upskill, Upgrade)
    SEPARATOR = "&"


class UpskillHealthPromotion(CombinedIntervention):
    PARTS = (Upskill, HealthPromotion)


class UpgradeHealthPromotion(CombinedIntervention):
    PARTS = (Upgrade, HealthPromotion)


class UpskillUniformWaitSensitivity(CombinedIntervention):
    PARTS = (Upskill, UniformWaitSensitivity)


class UpgradeUniformWaitSensitivity(CombinedIntervention):
    PARTS = (Upgrade, UniformWaitSensitivity)
