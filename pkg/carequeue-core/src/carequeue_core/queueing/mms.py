import math
from typing import Tuple

import numpy as np
from scipy.special import gammaln, logsumexp

from carequeue_types import DelayKind
from .base import DelayFunction


def erlang_c_wait(load: float, servers: int) -> float:
    """
    Normalized queueing delay Q_s(z) = C(s, z) / (s - z) of an M/M/s queue at
    offered load z = rate / service_rate, where C is the Erlang C probability
    of waiting. The queue wait is Q_s(z) / service_rate.
    """
    if load <= 0.0:
        return 0.0
    log_tail, log_total = _erlang_logs(load, servers)
    return math.exp(log_tail - log_total) / (servers - load)


def erlang_c_wait_slope(load: float, servers: int) -> float:
    """Derivative of erlang_c_wait with respect to the load."""
    s = servers
    if load <= 0.0:
        return 1.0 if s == 1 else 0.0
    log_tail, log_total = _erlang_logs(load, s)
    c = math.exp(log_tail - log_total)
    head_terms = np.arange(s) * math.log(load) - gammaln(np.arange(s) + 1)
    log_head = float(logsumexp(head_terms))
    # d/dz log(sum_{k<s} z^k/k!) = 1 - (z^{s-1}/(s-1)!) / sum_{k<s} z^k/k!
    last = (s - 1) * math.log(load) - float(gammaln(s))
    head_log_slope = 1.0 - math.exp(last - log_head)
    tail_log_slope = s / load + 1.0 / (s - load)
    c_slope = c * (1.0 - c) * (tail_log_slope - head_log_slope)
    return c_slope / (s - load) + c / ((s - load) * (s - load))


def _erlang_logs(load: float, servers: int) -> Tuple[float, float]:
    s = servers
    k = np.arange(s)
    head = k * math.log(load) - gammaln(k + 1)
    tail = (
        s * math.log(load) - float(gammaln(s + 1)) + math.log(s) - math.log(s - load)
    )
    return tail, float(logsumexp(np.append(head, tail)))


class MMsDelay(DelayFunction):
    """Multi-server queue with Poisson arrivals and exponential service (Erlang C)."""

    @classmethod
    def kind(cls) -> DelayKind:
        return DelayKind.MMS

    def queue_wait(self, rate: float) -> float:
        mu = self.model.service_rate
        return erlang_c_wait(rate / mu, self.model.servers) / mu

    def queue_wait_slope(self, rate: float) -> float:
        mu = self.model.service_rate
        return erlang_c_wait_slope(rate / mu, self.model.servers) / (mu * mu)
