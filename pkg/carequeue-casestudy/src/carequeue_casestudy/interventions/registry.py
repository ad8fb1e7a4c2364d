from pathlib import Path
from typing import Dict, List, Optional, Sequence, Type

from carequeue_types import AttributeUtilities, FacilityTable, InterventionSpec
from carequeue_core.core.exceptions import UnknownInterventionError
from ..tables import (
    load_attribute_utilities,
    load_facility_table,
    load_intervention_specs,
)
from .attributes import Upgrade, Upskill, UpskillToSenior
from .base import Intervention
from .behaviour import HealthPromotion, UniformWaitSensitivity
from .combined import (
    UpgradeHealthPromotion,
    UpgradeUniformWaitSensitivity,
    UpskillAndUpgrade,
    UpskillHealthPromotion,
    UpskillUniformWaitSensitivity,
)

BASELINE = InterventionSpec(name="Baseline", description="No intervention")


class InterventionRegistry:

    _interventions: Dict[str, Type[Intervention]] = {}

    @classmethod
    def register(cls, intervention_class: Type[Intervention]) -> None:
        cls._interventions[intervention_class.name()] = intervention_class

    @classmethod
    def _key(cls, name: str) -> Optional[str]:
        for key in cls._interventions:
            if key.lower() == name.lower():
                return key
        return None

    @classmethod
    def exists(cls, name: str) -> bool:
        return cls._key(name) is not None

    @classmethod
    def get(cls, name: str) -> Intervention:
        key = cls._key(name)
        if key is None:
            raise UnknownInterventionError(name)
        return cls._interventions[key]()

    @classmethod
    def names(cls) -> List[str]:
        return list(cls._interventions)

    @classmethod
    def list(cls) -> List[Dict[str, str]]:
        return [item.metadata() for item in cls._interventions.values()]


def builtin_interventions(
    data: Optional[AttributeUtilities] = None, table: Optional[FacilityTable] = None
) -> List[InterventionSpec]:
    """Every registered intervention, built from the case-study tables."""
    data = data if data is not None else load_attribute_utilities()
    table = table if table is not None else load_facility_table()
    return [
        InterventionRegistry.get(name).build(data, table)
        for name in InterventionRegistry.names()
    ]


def resolve_intervention(
    name_or_path: str,
    data: Optional[AttributeUtilities] = None,
    table: Optional[FacilityTable] = None,
    extra_specs: Sequence[InterventionSpec] = (),
) -> InterventionSpec:
    """
    Look an intervention up by name ('baseline', a registered name, or the
    name of one of `extra_specs`), or read it from a spec file.
    """
    if name_or_path.lower() == BASELINE.name.lower():
        return BASELINE
    if InterventionRegistry.exists(name_or_path):
        data = data if data is not None else load_attribute_utilities()
        table = table if table is not None else load_facility_table()
        return InterventionRegistry.get(name_or_path).build(data, table)
    for spec in extra_specs:
        if spec.name.lower() == name_or_path.lower():
            return spec
    path = Path(name_or_path)
    if path.is_file():
        specs = load_intervention_specs(path)
        if len(specs) == 1:
            return specs[0]
    raise UnknownInterventionError(name_or_path)


for _intervention in (
    Upskill,
    Upgrade,
    UpskillAndUpgrade,
    HealthPromotion,
    UniformWaitSensitivity,
    UpskillToSenior,
    UpskillHealthPromotion,
    UpgradeHealthPromotion,
    UpskillUniformWaitSensitivity,
    UpgradeUniformWaitSensitivity,
):
    InterventionRegistry.register(_intervention)
