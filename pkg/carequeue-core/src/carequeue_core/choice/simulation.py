"""Monte-Carlo estimates of the expected maximum utility for any noise law."""
import logging

import numpy as np

from carequeue_types import (
    ChoiceDistribution,
    GumbelNoise,
    MonteCarloEstimate,
    NormalNoise,
    UtilityVector,
)
from ..core.exceptions import UnsupportedNoiseError

logger = logging.getLogger(__name__)


def _draw_noise(
    noise: object, rng: np.random.Generator, shape: tuple
) -> np.ndarray:
    if isinstance(noise, GumbelNoise):
        # Location -gamma/beta gives mean-zero noise, so E[max] equals mnl_phi
        scale = 1.0 / noise.scale
        return rng.gumbel(loc=-np.euler_gamma * scale, scale=scale, size=shape)
    if isinstance(noise, NormalNoise):
        return rng.normal(loc=0.0, scale=noise.sigma, size=shape)
    raise UnsupportedNoiseError(f"Unsupported noise specification: {noise!r}")


def mc_phi_and_probabilities(
    u: UtilityVector, noise: object, samples: int, seed: int
) -> MonteCarloEstimate:
    """
    Sample max_j(u_j + e_j) and the argmax frequencies.

    Draws come from a Philox generator keyed by `seed`, so the estimate is
    reproducible across platforms.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    values = np.asarray(u.values, dtype=float)
    rng = np.random.Generator(np.random.Philox(seed))
    draws = values + _draw_noise(noise, rng, (samples, values.size))

    maxima = draws.max(axis=1)
    counts = np.bincount(draws.argmax(axis=1), minlength=values.size)
    probabilities = counts / samples

    phi = float(maxima.mean())
    phi_std_error = (
        float(maxima.std(ddof=1) / np.sqrt(samples)) if samples > 1 else 0.0
    )
    std_errors = np.sqrt(probabilities * (1.0 - probabilities) / samples)
    logger.debug("Monte-Carlo phi %.6f from %d draws", phi, samples)

    return MonteCarloEstimate(
        phi=phi,
        phi_std_error=phi_std_error,
        distribution=ChoiceDistribution(
            probabilities=tuple(float(p) for p in probabilities)
        ),
        probability_std_errors=tuple(float(e) for e in std_errors),
        samples=samples,
        seed=seed,
    )
