from abc import ABC, abstractmethod
from typing import Dict, Optional

import numpy as np
from scipy.integrate import quad
from scipy.optimize import bisect

from carequeue_types import DelayKind, DelayModel
from ..core.exceptions import SaturationError

# Upper end of the rate bracket, relative to the per-queue saturation rate
_BRACKET_TOP = 1.0 - 1e-12
# Bisection stops at this relative width, well inside 1e-12
_RTOL = 4.0 * float(np.finfo(float).eps)


class DelayFunction(ABC):
    """
    Expected wait of a facility level as a function of its annual flow.

    Subclasses describe one queue through per-queue primitives in hours and
    arrivals per hour. The level wait is `multiplier` identically loaded
    queues in sequence; the level flow spreads evenly over `capacity`
    queue-hours per year. Below zero flow the wait continues linearly so that
    the inverse is defined on all reals.
    """

    def __init__(self, model: DelayModel):
        self.model = model

    @classmethod
    @abstractmethod
    def kind(cls) -> DelayKind:
        pass

    @classmethod
    def documentation(cls) -> str:
        return (cls.__doc__ or "").strip()

    @abstractmethod
    def queue_wait(self, rate: float) -> float:
        """Expected queueing delay of one queue at `rate` arrivals per hour."""
        pass

    @abstractmethod
    def queue_wait_slope(self, rate: float) -> float:
        """Derivative of queue_wait with respect to the rate."""
        pass

    def queue_rate(self, wait: float) -> float:
        """Inverse of queue_wait for wait >= 0, by bisection."""
        if wait <= 0.0:
            return 0.0
        top = self.queue_saturation * _BRACKET_TOP
        if self.queue_wait(top) <= wait:
            return top
        return float(
            bisect(
                lambda rate: self.queue_wait(rate) - wait,
                0.0,
                top,
                xtol=1e-15 * top,
                rtol=_RTOL,
                maxiter=500,
            )
        )

    def queue_wait_integral(self, rate: float) -> float:
        """Integral of queue_wait from 0 to `rate`."""
        value, _ = quad(
            self.queue_wait, 0.0, rate, epsabs=1e-12, epsrel=1e-12, limit=200
        )
        return float(value)

    def queue_rate_integral(self, wait: float) -> float:
        """Integral of queue_rate from 0 to `wait`, by parts over the wait curve."""
        if wait <= 0.0:
            return 0.0
        # one inversion; queue_wait(queue_rate(w)) = w below the bracket top
        rate = self.queue_rate(wait)
        return wait * rate - self.queue_wait_integral(rate)

    @property
    def queue_saturation(self) -> float:
        return self.model.servers * self.model.service_rate

    @property
    def saturation(self) -> float:
        return self.model.saturation

    @property
    def zero_flow_wait(self) -> float:
        return self.model.zero_flow_wait

    def wait(self, flow: float) -> float:
        """Level wait in hours at `flow` patients per year."""
        model = self.model
        if flow < 0.0:
            return self.zero_flow_wait + flow / model.capacity
        if flow >= self.saturation:
            raise SaturationError(flow, self.saturation, model.level_id)
        rate = flow / model.capacity
        if rate >= self.queue_saturation:
            raise SaturationError(flow, self.saturation, model.level_id)
        return self.zero_flow_wait + model.multiplier * self.queue_wait(rate)

    def inverse_wait(self, wait: float) -> float:
        """Flow in patients per year whose level wait is `wait` hours."""
        model = self.model
        excess = wait - self.zero_flow_wait
        if excess <= 0.0:
            return model.capacity * excess
        return model.capacity * self.queue_rate(excess / model.multiplier)

    def inverse_wait_slope(self, wait: float) -> float:
        """Derivative of inverse_wait, used for the objective's curvature."""
        model = self.model
        excess = wait - self.zero_flow_wait
        if excess <= 0.0:
            return model.capacity
        rate = self.queue_rate(excess / model.multiplier)
        slope = self.queue_wait_slope(rate)
        if slope <= 0.0 or slope == float("inf"):
            return 0.0
        return model.capacity / (model.multiplier * slope)

    def h_integral(self, wait: float) -> float:
        """Integral of inverse_wait from the zero-flow wait to `wait`."""
        model = self.model
        excess = wait - self.zero_flow_wait
        if excess <= 0.0:
            return 0.5 * model.capacity * excess * excess
        return (
            model.capacity
            * model.multiplier
            * self.queue_rate_integral(excess / model.multiplier)
        )

    def describe(self) -> Dict[str, Optional[str]]:
        return {
            "kind": self.kind().value,
            "level": self.model.level_id,
            "wait_measure": self.model.wait_measure.value,
        }
