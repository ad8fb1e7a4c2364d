from typing import Dict, Tuple

from pydantic import Field

from .base import FrozenModel
from .enums import WaitMeasure


class ClassAttributes(FrozenModel):
    """Discrete-choice coefficients of one patient class."""

    id: str = Field(..., description="Class label", title="ID")
    demand_share: float = Field(
        ..., description="Fraction of total demand in this class", title="Demand Share"
    )
    opt_out_utility: float = Field(..., title="Opt-out Utility")
    alpha: float = Field(..., description="Utility per hour of waiting", title="Alpha")
    skill: Dict[str, float] = Field(
        ...,
        description="Utility per doctor skill level (junior, senior, expert)",
        title="Skill Utilities",
    )
    equipment: Dict[str, float] = Field(
        ...,
        description="Utility per equipment status (obsolete, standard, advanced)",
        title="Equipment Utilities",
    )


class AttributeUtilities(FrozenModel):
    """Per-class utility coefficients and the demand they apply to."""

    total_demand: float = Field(
        ..., description="Potential first visits per year", title="Total Demand"
    )
    classes: Tuple[ClassAttributes, ...]

    def by_id(self, class_id: str) -> ClassAttributes:
        for attributes in self.classes:
            if attributes.id == class_id:
                return attributes
        raise KeyError(f"Unknown patient class '{class_id}'")


class FacilityParameters(FrozenModel):
    """One row block of the facility table."""

    id: str = Field(..., description="Level label", title="ID")
    skill_level: str = Field(..., description="Doctor skill level", title="Skill")
    equipment_status: str = Field(
        ..., description="Equipment status", title="Equipment"
    )
    out_of_pocket_cost: float = Field(..., description="CNY per visit", title="Cost")
    travel_time_min: float = Field(..., title="Travel Time (min)")
    total_visit_time_hours: float = Field(..., title="Total Visit Time (h)")
    visit_time_other_than_waiting_min: float = Field(
        ..., title="Visit Time Other Than Waiting (min)"
    )
    service_rate: float = Field(
        ..., description="Patients per doctor-hour", title="Service Rate"
    )
    multiplier: float = Field(..., title="Waiting Time Multiplier")
    facilities: int = Field(..., description="Number of facilities", title="Facilities")
    doctors_per_facility: float = Field(..., title="Doctors per Facility")
    first_visit_fraction: float = Field(
        ...,
        description="Share of doctor time available for first visits",
        title="First Visit Fraction",
    )
    zero_wait_utility: Dict[str, float] = Field(
        ..., description="Utility per class at the reference waits", title="Utility"
    )

    @property
    def reference_wait(self) -> float:
        """Total visit time minus non-waiting visit time, in hours."""
        other = self.visit_time_other_than_waiting_min / 60.0
        return self.total_visit_time_hours - other

    def nominal_capacity(self, hours_per_year: float) -> float:
        return (
            self.facilities
            * self.doctors_per_facility
            * self.first_visit_fraction
            * hours_per_year
        )


class FacilityTable(FrozenModel):
    hours_per_year: float = Field(2088.0, title="Hours per Year")
    wait_measure: WaitMeasure = Field(WaitMeasure.SYSTEM, title="Wait Measure")
    levels: Tuple[FacilityParameters, ...]
