"""Errors raised by carequeue. Every error derives from CareQueueError."""
from typing import List, Optional

from carequeue_types import Violation


class CareQueueError(Exception):
    """Base class for carequeue errors."""

    exit_code = 1


class ScenarioParseError(CareQueueError):
    """A scenario file could not be read or does not match the schema."""

    exit_code = 2


class ScenarioValidationError(CareQueueError):
    """A scenario or intervention breaks one or more invariants."""

    exit_code = 2

    def __init__(self, violations: List[Violation], message: Optional[str] = None):
        self.violations = list(violations)
        if message is None:
            details = "; ".join(f"{v.field}: {v.rule}" for v in self.violations)
            message = f"Scenario is invalid: {details}"
        super().__init__(message)


class NumericalError(CareQueueError):
    exit_code = 3


class SaturationError(NumericalError):
    """Flow at or above the saturation level of a facility level."""

    def __init__(self, flow: float, saturation: float, level: Optional[str] = None):
        self.flow = flow
        self.saturation = saturation
        self.level = level
        where = f"level '{level}'" if level else "delay model"
        super().__init__(
            f"Flow {flow:.6g} reaches the saturation {saturation:.6g} of {where}"
        )


class NonSaturationViolated(NumericalError):
    """Without opt-out, total saturation must exceed total demand."""

    def __init__(self, margin: float):
        self.margin = margin
        super().__init__(
            "Non-saturation condition violated: total saturation minus total "
            f"demand is {margin:.6g} patients/year"
        )


class ConvergenceError(NumericalError):
    def __init__(self, message: str, iterations: int, grad_norm: float):
        self.iterations = iterations
        self.grad_norm = grad_norm
        super().__init__(message)


class CalibrationError(NumericalError):
    """A reference wait cannot be produced by any stable flow."""

    def __init__(self, level: str, required_rate: float, saturation: float):
        self.level = level
        self.required_rate = required_rate
        self.saturation = saturation
        super().__init__(
            f"Reference wait of level '{level}' needs a per-queue rate of "
            f"{required_rate:.6g}/h, outside the stable range (0, {saturation:.6g})"
        )


class UnsupportedNoiseError(CareQueueError):
    exit_code = 1


class UnknownInterventionError(CareQueueError):
    exit_code = 1

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Unknown intervention '{name}'")
