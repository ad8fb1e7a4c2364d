from pathlib import Path
from typing import Any, Dict, Union

from pydantic import ValidationError

from carequeue_types import Scenario
from ..core.exceptions import ScenarioParseError, ScenarioValidationError
from .validation import validate_scenario


def load_scenario(path: Union[str, Path]) -> Scenario:
    """Read, parse and validate a scenario file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ScenarioParseError(f"Cannot read scenario file {path}: {e}") from e
    try:
        scenario = Scenario.model_validate_json(text)
    except ValidationError as e:
        errors = "; ".join(
            f"{'.'.join(str(p) for p in error['loc']) or '<root>'}: {error['msg']}"
            for error in e.errors()
        )
        raise ScenarioParseError(f"Malformed scenario file {path}: {errors}") from e

    violations = validate_scenario(scenario)
    if violations:
        raise ScenarioValidationError(violations)
    return scenario


def save_scenario(s: Scenario, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(s.model_dump_json(indent=2, exclude_none=True), encoding="utf-8")
    return path


def scenario_json_schema() -> Dict[str, Any]:
    """JSON schema of scenario files."""
    return Scenario.model_json_schema()
