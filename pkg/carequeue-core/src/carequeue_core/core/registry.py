from typing import Dict, List, Type

from carequeue_types import DelayKind, DelayModel
from ..queueing.base import DelayFunction
from ..queueing.mm1 import MM1Delay
from ..queueing.mms import MMsDelay


class DelayRegistry:
    """Delay functions by queue kind. New queue models register here."""

    _delays: Dict[DelayKind, Type[DelayFunction]] = {}

    @classmethod
    def register(cls, delay_class: Type[DelayFunction]) -> None:
        cls._delays[delay_class.kind()] = delay_class

    @classmethod
    def exists(cls, kind: DelayKind) -> bool:
        return kind in cls._delays

    @classmethod
    def get(cls, kind: DelayKind) -> Type[DelayFunction]:
        if kind not in cls._delays:
            raise KeyError(f"No delay function registered for kind '{kind}'")
        return cls._delays[kind]

    @classmethod
    def create(cls, model: DelayModel) -> DelayFunction:
        return cls.get(model.kind)(model)

    @classmethod
    def list(cls) -> List[Dict[str, str]]:
        return [
            {"kind": kind.value, "documentation": delay.documentation()}
            for kind, delay in cls._delays.items()
        ]


DelayRegistry.register(MM1Delay)
DelayRegistry.register(MMsDelay)
