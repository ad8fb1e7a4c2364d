from decimal import ROUND_HALF_UP, Decimal

from carequeue_types import AttributeUtilities, FacilityTable, InterventionSpec
from .base import Intervention

MILD = "mild"
SEVERE = "severe"


def halve(value: float) -> float:
    """Half of a table value, kept at the table's three decimals (half up)."""
    half = Decimal(str(value)) / 2
    return float(half.quantize(Decimal("0.001"), rounding=ROUND_HALF_UP))


class HealthPromotion(Intervention):
    """
    Campaign making patients with mild symptoms seek care: halves the
    utility of opting out for the mild class.
    """

    @classmethod
    def name(cls) -> str:
        return "HealthPromotion"

    @classmethod
    def category(cls) -> str:
        return "Demand"

    def build(self, data: AttributeUtilities, table: FacilityTable) -> InterventionSpec:
        mild = data.by_id(MILD)
        return InterventionSpec(
            name=self.name(),
            description=self.documentation(),
            opt_out_overrides={MILD: halve(mild.opt_out_utility)},
        )


class UniformWaitSensitivity(Intervention):
    """
    Severe patients become as sensitive to waiting as mild ones. Reference
    utilities are left untouched.
    """

    @classmethod
    def name(cls) -> str:
        return "UniformWaitSensitivity"

    @classmethod
    def category(cls) -> str:
        return "Demand"

    def build(self, data: AttributeUtilities, table: FacilityTable) -> InterventionSpec:
        return InterventionSpec(
            name=self.name(),
            description=self.documentation(),
            alpha_overrides={SEVERE: data.by_id(MILD).alpha},
        )
