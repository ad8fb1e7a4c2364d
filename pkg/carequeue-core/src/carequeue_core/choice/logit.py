"""Closed-form multinomial logit: expected maximum utility and its gradient."""
import numpy as np
from scipy.special import logsumexp, softmax

from carequeue_types import ChoiceDistribution, UtilityVector


def log_sum_exp(values: np.ndarray, scale: float) -> float:
    """(1/scale) * log(sum(exp(scale * values))), max-shifted."""
    return float(logsumexp(scale * np.asarray(values, dtype=float))) / scale


def choice_probabilities(values: np.ndarray, scale: float) -> np.ndarray:
    """Softmax at `scale`, renormalized so the entries sum to one."""
    probabilities = softmax(scale * np.asarray(values, dtype=float))
    return probabilities / probabilities.sum()


def mnl_phi(u: UtilityVector) -> float:
    """Expected maximum utility of alternatives with i.i.d. Gumbel noise."""
    return log_sum_exp(np.asarray(u.values), u.scale)


def mnl_probabilities(u: UtilityVector) -> ChoiceDistribution:
    probabilities = choice_probabilities(np.asarray(u.values), u.scale)
    return ChoiceDistribution(probabilities=tuple(float(p) for p in probabilities))


def phi_gradient_check(u: UtilityVector, h: float = 1e-5) -> float:
    """
    Max deviation between central differences of mnl_phi and the choice
    probabilities.
    """
    if not 0.0 < h <= 1e-3:
        raise ValueError(f"Step must lie in (0, 1e-3], got {h}")
    values = np.asarray(u.values, dtype=float)
    probabilities = choice_probabilities(values, u.scale)
    deviation = 0.0
    for i in range(values.size):
        step = np.zeros_like(values)
        step[i] = h
        upper = log_sum_exp(values + step, u.scale)
        lower = log_sum_exp(values - step, u.scale)
        derivative = (upper - lower) / (2.0 * h)
        deviation = max(deviation, abs(derivative - probabilities[i]))
    return deviation
