from .serializer import load_scenario, save_scenario, scenario_json_schema
from .validation import validate_scenario

__all__ = [
    "load_scenario",
    "save_scenario",
    "scenario_json_schema",
    "validate_scenario",
]
