from typing import Optional

from pydantic import Field

from .base import FrozenModel
from .enums import DelayKind, WaitMeasure
from .facility import FacilityLevel


class DelayModel(FrozenModel):
    """Queueing parameters of one facility level, detached from the scenario."""

    kind: DelayKind = Field(DelayKind.MM1, description="Queue model", title="Kind")
    service_rate: float = Field(
        ..., description="Patients per doctor-hour", title="Service Rate"
    )
    servers: int = Field(1, description="Servers per queue", title="Servers")
    multiplier: float = Field(1.0, description="Sequential queues", title="Multiplier")
    capacity: float = Field(
        ..., description="Queue-hours per year", title="Capacity"
    )
    hours_per_year: float = Field(
        2088.0, description="Working hours per year", title="Hours per Year"
    )
    wait_measure: WaitMeasure = Field(
        WaitMeasure.QUEUE, description="Queue or system time", title="Wait Measure"
    )
    level_id: Optional[str] = Field(
        None, description="Facility level the model belongs to", title="Level"
    )

    @classmethod
    def from_level(cls, level: FacilityLevel, hours_per_year: float) -> "DelayModel":
        return cls(
            kind=level.kind,
            service_rate=level.service_rate,
            servers=level.servers,
            multiplier=level.multiplier,
            capacity=level.capacity,
            hours_per_year=hours_per_year,
            wait_measure=level.wait_measure,
            level_id=level.id,
        )

    @property
    def saturation(self) -> float:
        return self.capacity * self.servers * self.service_rate

    @property
    def zero_flow_wait(self) -> float:
        if self.wait_measure is WaitMeasure.SYSTEM:
            return self.multiplier / self.service_rate
        return 0.0
