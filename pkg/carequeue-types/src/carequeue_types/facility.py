from pydantic import Field

from .base import FrozenModel
from .enums import DelayKind, WaitMeasure


class FacilityLevel(FrozenModel):
    """A facility type (hospital level) and the queue its patients join."""

    id: str = Field(..., description="Level label, e.g. 'primary'", title="ID")
    service_rate: float = Field(
        ..., description="Patients served per doctor-hour", title="Service Rate"
    )
    servers: int = Field(1, description="Servers per queue", title="Servers")
    multiplier: float = Field(
        1.0,
        description="Number of sequential queues a patient joins per visit",
        title="Waiting Time Multiplier",
    )
    capacity: float = Field(
        ...,
        description="Queue-hours per year available for first visits",
        title="Capacity",
    )
    kind: DelayKind = Field(
        DelayKind.MM1, description="Queueing model of one queue", title="Delay Kind"
    )
    wait_measure: WaitMeasure = Field(
        WaitMeasure.QUEUE,
        description="Whether waits include service time",
        title="Wait Measure",
    )

    @property
    def saturation(self) -> float:
        """Flow (patients/year) at which the wait diverges."""
        return self.capacity * self.servers * self.service_rate

    @property
    def zero_flow_wait(self) -> float:
        """Wait at zero flow, in hours."""
        if self.wait_measure is WaitMeasure.SYSTEM:
            return self.multiplier / self.service_rate
        return 0.0
