from pydantic import Field

from .base import FrozenModel


class PatientClass(FrozenModel):
    """A homogeneous patient population choosing among facility levels."""

    id: str = Field(..., description="Class label, e.g. 'mild'", title="ID")
    arrival_rate: float = Field(
        ..., description="Potential patients per year", title="Arrival Rate"
    )
    alpha: float = Field(
        ...,
        description="Utility lost per hour of waiting",
        title="Waiting Sensitivity",
    )
    gumbel_scale: float = Field(
        1.0, description="Scale of the Gumbel utility noise", title="Gumbel Scale"
    )
    opt_out_utility: float = Field(
        ..., description="Utility of not seeking care", title="Opt-out Utility"
    )
