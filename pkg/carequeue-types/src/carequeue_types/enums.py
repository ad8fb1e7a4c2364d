from enum import Enum


class DelayKind(str, Enum):
    MM1 = "MM1"
    MMS = "MMs"


class WaitMeasure(str, Enum):
    # Expected time in queue, service excluded
    QUEUE = "queue"
    # Expected time in system, service included
    SYSTEM = "system"


class StartMode(str, Enum):
    ZERO_FLOW = "zero"
    REFERENCE = "reference"


class EvaluationModel(str, Enum):
    EQUILIBRIUM = "equilibrium"
    MNL_ONLY = "mnl"


class SignVerdict(str, Enum):
    STRONG_POSITIVE = "++"
    POSITIVE = "+"
    NEGATIVE = "-"
    STRONG_NEGATIVE = "--"
    NONE = ""

    @property
    def significant(self) -> bool:
        return self is not SignVerdict.NONE
