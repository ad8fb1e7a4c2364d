"""
carequeue core - equilibrium of facility choice and congestion-driven waits
"""

from .choice import (
    mc_phi_and_probabilities,
    mnl_phi,
    mnl_probabilities,
    phi_gradient_check,
)
from .equilibrium import (
    check_nonsaturation,
    fixed_point_oracle,
    solve,
    theta,
)
from .model import load_scenario, save_scenario, scenario_json_schema, validate_scenario
from .queueing.delay import h_integral, inverse_wait, wait

__version__ = "0.1.0"
__all__ = [
    "check_nonsaturation",
    "fixed_point_oracle",
    "h_integral",
    "inverse_wait",
    "load_scenario",
    "mc_phi_and_probabilities",
    "mnl_phi",
    "mnl_probabilities",
    "phi_gradient_check",
    "save_scenario",
    "scenario_json_schema",
    "solve",
    "theta",
    "validate_scenario",
    "wait",
]
