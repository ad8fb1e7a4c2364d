from pydantic import Field

from .base import FrozenModel


class Violation(FrozenModel):
    """One broken invariant of a scenario."""

    field: str = Field(..., description="Offending field, e.g. 'classes[0].alpha'")
    rule: str = Field(..., description="The rule that failed, e.g. 'alpha > 0'")
