import math
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.stats import binom

from carequeue_types import (
    PairedOutcome,
    SignificanceReport,
    SignVerdict,
    VariableSignificance,
)

# Published thresholds for 1000 instances, applied as is
SIGN_THRESHOLDS_1000 = (526, 537, 473, 462)
NONZERO_LIMIT_1000 = 25
NONZERO_FRACTION = 0.025


def _upper_threshold(n: int, alpha: float) -> int:
    """Smallest t with P(X >= t) < alpha for X ~ Binomial(n, 1/2); n + 1 if none."""
    t = np.arange(n + 1)
    tails = binom.sf(t - 1, n, 0.5)
    below = np.nonzero(tails < alpha)[0]
    return int(t[below[0]]) if below.size else n + 1


def sign_thresholds(n: int) -> Tuple[int, int, int, int]:
    """(+, ++, -, --) thresholds on the count of positive differences."""
    if n == 1000:
        return SIGN_THRESHOLDS_1000
    plus = _upper_threshold(n, 0.05)
    plus_plus = _upper_threshold(n, 0.01)
    return plus, plus_plus, n - plus, n - plus_plus


def sign_counts(differences: Sequence[float]) -> Tuple[int, int]:
    positive = sum(1 for d in differences if d > 0)
    negative = sum(1 for d in differences if d < 0)
    return positive, negative


def sign_test(differences: Sequence[float]) -> SignVerdict:
    """Verdict on the count of strictly positive differences; ties count neither way."""
    if not differences:
        raise ValueError("Sign test needs at least one difference")
    positive, _ = sign_counts(differences)
    plus, plus_plus, minus, minus_minus = sign_thresholds(len(differences))
    if positive >= plus_plus:
        return SignVerdict.STRONG_POSITIVE
    if positive >= plus:
        return SignVerdict.POSITIVE
    if positive <= minus_minus:
        return SignVerdict.STRONG_NEGATIVE
    if positive <= minus:
        return SignVerdict.NEGATIVE
    return SignVerdict.NONE


def nonzero_limit(n: int) -> int:
    if n == 1000:
        return NONZERO_LIMIT_1000
    return math.floor(NONZERO_FRACTION * n)


def nonzero_test(differences: Sequence[float]) -> bool:
    """True when zero lies outside the central 95% of the differences."""
    if not differences:
        raise ValueError("Nonzero test needs at least one difference")
    positive, negative = sign_counts(differences)
    return min(positive, negative) <= nonzero_limit(len(differences))


def paired_differences(outcomes: Sequence[PairedOutcome], variable: str) -> List[float]:
    """Differences on instances where both models are feasible."""
    differences = []
    for outcome in outcomes:
        if outcome.failure or not (outcome.feasible_mnl and outcome.feasible_eq):
            continue
        difference: Optional[float] = outcome.value(variable).difference
        if difference is not None:
            differences.append(difference)
    return differences


def significance(
    outcomes: Sequence[PairedOutcome], intervention: str, variables: Sequence[str]
) -> SignificanceReport:
    entries = []
    for variable in variables:
        differences = paired_differences(outcomes, variable)
        positive, negative = sign_counts(differences)
        entries.append(
            VariableSignificance(
                variable=variable,
                positive_count=positive,
                negative_count=negative,
                sign_verdict=(
                    sign_test(differences) if differences else SignVerdict.NONE
                ),
                nonzero_flag=nonzero_test(differences) if differences else False,
            )
        )
    usable = [o for o in outcomes if o.failure is None]
    return SignificanceReport(
        intervention=intervention,
        instances=len(outcomes),
        feasible_count=sum(o.feasible_mnl and o.feasible_eq for o in usable),
        feasible_mnl=sum(o.feasible_mnl for o in outcomes),
        feasible_eq=sum(o.feasible_eq for o in usable),
        failure_count=len(outcomes) - len(usable),
        variables=tuple(entries),
    )
