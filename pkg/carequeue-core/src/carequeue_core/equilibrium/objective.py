"""
Convex objective whose unique minimizer is the choice-waiting equilibrium.

    theta(w) = sum_i H_i(w_i) + sum_k (I_k / alpha_k) * phi_k(u_k(w))

with u_k(w) = (u0_k, ref_k1 - alpha_k w_1, ...). Its gradient is
inverse_wait_i(w_i) - sum_k I_k pi_ki(w), so a zero gradient means the flows
implied by the choice probabilities produce exactly the waits w.
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np
from scipy.linalg import LinAlgError, cho_factor
from scipy.special import logsumexp, softmax

from carequeue_types import DelayModel, ObjectiveReport, Scenario
from ..queueing.base import DelayFunction
from ..queueing.delay import delay_function


def delay_functions(s: Scenario) -> List[DelayFunction]:
    return [
        delay_function(DelayModel.from_level(level, s.hours_per_year))
        for level in s.levels
    ]


def utilities(
    s: Scenario, waits: Sequence[float], alphas: Optional[Sequence[float]] = None
) -> np.ndarray:
    """Utilities per class over {opt-out} and the levels at `waits`."""
    w = np.asarray(waits, dtype=float)
    alpha = np.asarray(
        alphas if alphas is not None else [c.alpha for c in s.classes], dtype=float
    )
    reference = np.asarray(s.ref_utility, dtype=float).reshape(s.n_classes, -1)
    opt_out = np.array([[c.opt_out_utility] for c in s.classes], dtype=float)
    return np.hstack([opt_out, reference - alpha[:, None] * w[None, :]])


def choice_matrix(
    s: Scenario, waits: Sequence[float], alphas: Optional[Sequence[float]] = None
) -> np.ndarray:
    """
    Choice probabilities per class, column 0 being opt-out. Without opt-out
    the first column is zero and the levels share all demand.
    """
    u = utilities(s, waits, alphas)
    scales = np.array([c.gumbel_scale for c in s.classes], dtype=float)
    scaled = scales[:, None] * u
    if s.opt_out_enabled:
        probabilities = softmax(scaled, axis=1)
    else:
        probabilities = np.zeros_like(u)
        probabilities[:, 1:] = softmax(scaled[:, 1:], axis=1)
    return probabilities / probabilities.sum(axis=1, keepdims=True)


def flows_from_choice(s: Scenario, choice: np.ndarray) -> np.ndarray:
    """Annual flow per level: sum over classes of arrival rate times probability."""
    arrivals = np.array([c.arrival_rate for c in s.classes], dtype=float)
    return arrivals @ choice[:, 1:]


@dataclass
class ObjectiveEvaluation:
    waits: np.ndarray
    theta: float
    gradient: np.ndarray
    hessian: np.ndarray
    choice: np.ndarray
    flows: np.ndarray
    total_demand: float

    @property
    def grad_norm(self) -> float:
        return float(np.max(np.abs(self.gradient))) / self.total_demand

    def hessian_factor(self) -> Optional[tuple]:
        try:
            return cho_factor(self.hessian)
        except LinAlgError:
            return None

    def report(self) -> ObjectiveReport:
        return ObjectiveReport(
            theta=self.theta,
            gradient=tuple(float(g) for g in self.gradient),
            hessian=tuple(tuple(float(h) for h in row) for row in self.hessian),
            hessian_pd=self.hessian_factor() is not None,
            grad_norm=self.grad_norm,
        )


def evaluate(
    s: Scenario,
    waits: Sequence[float],
    delays: Optional[List[DelayFunction]] = None,
    with_hessian: bool = True,
) -> ObjectiveEvaluation:
    delays = delays if delays is not None else delay_functions(s)
    w = np.asarray(waits, dtype=float)
    u = utilities(s, w)

    arrivals = np.array([c.arrival_rate for c in s.classes], dtype=float)
    alphas = np.array([c.alpha for c in s.classes], dtype=float)
    scales = np.array([c.gumbel_scale for c in s.classes], dtype=float)
    start = 0 if s.opt_out_enabled else 1

    phi = logsumexp(scales[:, None] * u[:, start:], axis=1) / scales
    choice = choice_matrix(s, w)
    flows = flows_from_choice(s, choice)

    theta = float(
        sum(d.h_integral(float(x)) for d, x in zip(delays, w))
        + np.sum(arrivals / alphas * phi)
    )
    gradient = np.array([d.inverse_wait(float(x)) for d, x in zip(delays, w)]) - flows

    n = s.n_levels
    hessian = np.zeros((n, n))
    if with_hessian:
        hessian += np.diag([d.inverse_wait_slope(float(x)) for d, x in zip(delays, w)])
        for k in range(s.n_classes):
            p = choice[k, 1:]
            weight = arrivals[k] * alphas[k] * scales[k]
            hessian += weight * (np.diag(p) - np.outer(p, p))

    return ObjectiveEvaluation(
        waits=w,
        theta=theta,
        gradient=gradient,
        hessian=hessian,
        choice=choice,
        flows=flows,
        total_demand=s.total_demand,
    )


def theta(s: Scenario, w: Sequence[float]) -> ObjectiveReport:
    """Objective value, gradient and curvature at waits `w` (hours)."""
    return evaluate(s, w).report()
