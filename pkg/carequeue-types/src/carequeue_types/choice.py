from typing import Literal, Tuple, Union

from pydantic import Field

from .base import FrozenModel


class UtilityVector(FrozenModel):
    """Deterministic utilities of one class over {opt-out} and the levels."""

    values: Tuple[float, ...] = Field(..., description="Utilities", title="Values")
    scale: float = Field(1.0, description="Gumbel scale beta", title="Scale")


class ChoiceDistribution(FrozenModel):
    probabilities: Tuple[float, ...] = Field(
        ..., description="Probability per alternative", title="Probabilities"
    )


class GumbelNoise(FrozenModel):
    kind: Literal["gumbel"] = "gumbel"
    scale: float = Field(1.0, description="Gumbel scale beta", title="Scale")


class NormalNoise(FrozenModel):
    kind: Literal["normal"] = "normal"
    sigma: float = Field(1.0, description="Standard deviation", title="Sigma")


NoiseSpec = Union[GumbelNoise, NormalNoise]


class MonteCarloEstimate(FrozenModel):
    """Sampled expected maximum utility and choice frequencies."""

    phi: float = Field(..., description="Mean of the sampled maxima", title="Phi")
    phi_std_error: float = Field(
        ..., description="Standard error of phi", title="Phi Std Error"
    )
    distribution: ChoiceDistribution
    probability_std_errors: Tuple[float, ...] = Field(
        ..., description="Standard error per probability", title="Std Errors"
    )
    samples: int = Field(..., description="Number of draws", title="Samples")
    seed: int = Field(..., description="RNG seed", title="Seed")
