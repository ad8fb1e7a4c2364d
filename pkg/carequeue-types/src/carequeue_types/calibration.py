from typing import Tuple

from pydantic import Field

from .base import FrozenModel


class CalibrationResult(FrozenModel):
    """Capacity factors that make the reference waits an equilibrium."""

    mild_share: float = Field(
        ...,
        description="Fraction of demand perceiving mild disease",
        title="Mild Share",
    )
    capacity_factors: Tuple[float, ...] = Field(
        ..., description="Multiplicative capacity adjustment per level", title="Factors"
    )
    required_rates: Tuple[float, ...] = Field(
        ..., description="Per-queue arrival rate per hour at the reference waits"
    )
    reference_waits: Tuple[float, ...] = Field(..., title="Reference Waits")
    residual: float = Field(
        ...,
        description="Max |equilibrium wait - reference wait| in hours",
        title="Residual",
    )
