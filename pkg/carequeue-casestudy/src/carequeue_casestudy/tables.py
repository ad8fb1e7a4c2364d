from pathlib import Path
from typing import List, Optional, Type, TypeVar, Union

from pydantic import BaseModel, TypeAdapter, ValidationError

from carequeue_types import AttributeUtilities, FacilityTable, InterventionSpec
from carequeue_core.core.exceptions import ScenarioParseError

DATA_DIR = Path(__file__).parent / "data"

Model = TypeVar("Model", bound=BaseModel)


def bundled_path(name: str) -> Path:
    """Path of a data file shipped with the package, e.g. 'baseline.json'."""
    return DATA_DIR / name


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as e:
        raise ScenarioParseError(f"Cannot read {path}: {e}") from e


def _load(model: Type[Model], path: Path) -> Model:
    try:
        return model.model_validate_json(_read(path))
    except ValidationError as e:
        raise ScenarioParseError(f"Malformed {path.name}: {e}") from e


def load_facility_table(path: Optional[Union[str, Path]] = None) -> FacilityTable:
    return _load(FacilityTable, Path(path) if path else bundled_path("table1.json"))


def load_attribute_utilities(
    path: Optional[Union[str, Path]] = None,
) -> AttributeUtilities:
    return _load(
        AttributeUtilities, Path(path) if path else bundled_path("table2.json")
    )


def load_intervention_specs(
    path: Optional[Union[str, Path]] = None,
) -> List[InterventionSpec]:
    """
    Intervention specs from a JSON file holding one spec or a list of specs.
    Defaults to the bundled examples.
    """
    path = Path(path) if path else bundled_path("interventions.json")
    text = _read(path)
    try:
        if text.lstrip().startswith("["):
            return TypeAdapter(List[InterventionSpec]).validate_json(text)
        return [InterventionSpec.model_validate_json(text)]
    except ValidationError as e:
        raise ScenarioParseError(f"Malformed intervention file {path}: {e}") from e
