from typing import Optional, Tuple

from pydantic import Field

from .base import FingerprintBase
from .facility import FacilityLevel
from .patient import PatientClass


class Scenario(FingerprintBase):
    """
    Full problem instance: facility levels, patient classes and the
    classes x levels matrix of reference utilities.

    Utilities at waits w are u[k][i] = ref_utility[k][i] - alpha[k] * w[i];
    the opt-out alternative has utility classes[k].opt_out_utility and no wait.
    """

    levels: Tuple[FacilityLevel, ...] = Field(
        ..., description="Facility levels in matrix column order", title="Levels"
    )
    classes: Tuple[PatientClass, ...] = Field(
        ..., description="Patient classes in matrix row order", title="Classes"
    )
    ref_utility: Tuple[Tuple[float, ...], ...] = Field(
        ...,
        description="Reference utility per class (rows) and level (columns)",
        title="Reference Utility",
    )
    opt_out_enabled: bool = Field(
        True, description="Whether patients may forgo care", title="Opt-out Enabled"
    )
    hours_per_year: float = Field(
        2088.0, description="Working hours per year", title="Hours per Year"
    )
    reference_waits: Optional[Tuple[float, ...]] = Field(
        None,
        description="Evidence based waits per level, in hours",
        title="Reference Waits",
    )

    @property
    def n_levels(self) -> int:
        return len(self.levels)

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    @property
    def total_demand(self) -> float:
        return sum(c.arrival_rate for c in self.classes)

    @property
    def total_saturation(self) -> float:
        return sum(level.saturation for level in self.levels)

    @property
    def zero_flow_waits(self) -> Tuple[float, ...]:
        return tuple(level.zero_flow_wait for level in self.levels)

    def level_index(self, level_id: str) -> int:
        for i, level in enumerate(self.levels):
            if level.id == level_id:
                return i
        raise KeyError(f"Unknown facility level '{level_id}'")

    def class_index(self, class_id: str) -> int:
        for k, patient_class in enumerate(self.classes):
            if patient_class.id == class_id:
                return k
        raise KeyError(f"Unknown patient class '{class_id}'")
