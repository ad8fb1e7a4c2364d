from carequeue_types import NonSaturationCheck, Scenario


def check_nonsaturation(s: Scenario) -> NonSaturationCheck:
    """
    Compare total saturation with total demand. Without opt-out an
    equilibrium exists only when saturation strictly exceeds demand.
    """
    total_saturation = sum(level.saturation for level in s.levels)
    total_demand = s.total_demand
    margin = total_saturation - total_demand
    return NonSaturationCheck(
        holds=margin > 0,
        margin=margin,
        total_saturation=total_saturation,
        total_demand=total_demand,
    )
