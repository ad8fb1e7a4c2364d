import math

from carequeue_types import DelayKind
from .base import DelayFunction


class MM1Delay(DelayFunction):
    """Single server queue with Poisson arrivals and exponential service."""

    @classmethod
    def kind(cls) -> DelayKind:
        return DelayKind.MM1

    def queue_wait(self, rate: float) -> float:
        mu = self.model.service_rate
        return rate / (mu * (mu - rate))

    def queue_wait_slope(self, rate: float) -> float:
        mu = self.model.service_rate
        return 1.0 / ((mu - rate) * (mu - rate))

    def queue_rate(self, wait: float) -> float:
        if wait <= 0.0:
            return 0.0
        mu = self.model.service_rate
        return mu * mu * wait / (1.0 + mu * wait)

    def queue_rate_integral(self, wait: float) -> float:
        mu = self.model.service_rate
        return mu * wait - math.log1p(mu * wait)
