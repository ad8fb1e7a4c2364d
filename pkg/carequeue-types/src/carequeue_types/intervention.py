from typing import Dict

from pydantic import Field

from .base import FrozenModel


class InterventionSpec(FrozenModel):
    """
    Declarative edit of a scenario.

    `utility_deltas[class_id][level_id]` is added to the reference utility;
    overrides replace the opt-out utility or waiting sensitivity of a class.
    """

    name: str = Field(..., description="Unique intervention name", title="Name")
    description: str = Field(
        "", description="What the policy does", title="Description"
    )
    utility_deltas: Dict[str, Dict[str, float]] = Field(
        default_factory=dict,
        description="Additive utility edits per class and level",
        title="Utility Deltas",
    )
    opt_out_overrides: Dict[str, float] = Field(
        default_factory=dict,
        description="Replacement opt-out utility per class",
        title="Opt-out Overrides",
    )
    alpha_overrides: Dict[str, float] = Field(
        default_factory=dict,
        description="Replacement waiting sensitivity per class",
        title="Alpha Overrides",
    )

    @property
    def is_noop(self) -> bool:
        no_deltas = all(
            delta == 0.0
            for row in self.utility_deltas.values()
            for delta in row.values()
        )
        return no_deltas and not self.opt_out_overrides and not self.alpha_overrides
