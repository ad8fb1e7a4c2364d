"""Delay-model entry points dispatching on DelayModel.kind."""
from functools import lru_cache

from carequeue_types import DelayModel
from ..core.registry import DelayRegistry
from .base import DelayFunction


@lru_cache(maxsize=1024)
def delay_function(model: DelayModel) -> DelayFunction:
    return DelayRegistry.create(model)


def wait(model: DelayModel, flow: float) -> float:
    """Level wait in hours at `flow` patients per year."""
    return delay_function(model).wait(flow)


def inverse_wait(model: DelayModel, wait_hours: float) -> float:
    """Flow in patients per year that produces `wait_hours`."""
    return delay_function(model).inverse_wait(wait_hours)


def h_integral(model: DelayModel, wait_hours: float) -> float:
    """Integral of inverse_wait from the zero-flow wait to `wait_hours`."""
    return delay_function(model).h_integral(wait_hours)
