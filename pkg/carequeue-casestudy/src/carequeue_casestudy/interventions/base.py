import inspect
from abc import ABC, abstractmethod
from typing import Dict

from carequeue_types import AttributeUtilities, FacilityTable, InterventionSpec


class Intervention(ABC):
    """
    A policy expressed as edits of the case-study scenario.

    Subclasses derive their edits from the attribute and facility tables and
    return them as a declarative InterventionSpec:

    ```python
    class MyPolicy(Intervention):
        @classmethod
        def name(cls) -> str:
            return "MyPolicy"

        @classmethod
        def category(cls) -> str:
            return "Supply"

        def build(self, data, table) -> InterventionSpec:
            return InterventionSpec(
                name=self.name(),
                utility_deltas={"mild": {"primary": 0.1}},
            )
    ```
    """

    @classmethod
    @abstractmethod
    def name(cls) -> str:
        pass

    @classmethod
    def category(cls) -> str:
        return "Other"

    @classmethod
    def documentation(cls) -> str:
        return inspect.cleandoc(cls.__doc__ or "")

    @abstractmethod
    def build(self, data: AttributeUtilities, table: FacilityTable) -> InterventionSpec:
        pass

    @classmethod
    def metadata(cls) -> Dict[str, str]:
        return {
            "class_name": cls.__name__,
            "name": cls.name(),
            "module": cls.__module__,
            "category": cls.category(),
            "documentation": cls.documentation(),
        }
