from .logit import (
    choice_probabilities,
    log_sum_exp,
    mnl_phi,
    mnl_probabilities,
    phi_gradient_check,
)
from .simulation import mc_phi_and_probabilities

__all__ = [
    "choice_probabilities",
    "log_sum_exp",
    "mc_phi_and_probabilities",
    "mnl_phi",
    "mnl_probabilities",
    "phi_gradient_check",
]
