from typing import List

from numpy.random import Generator, Philox

from carequeue_types import PerturbationSample, Scenario

SPREAD = 0.1
SEED_BITS = 64


def sample_perturbations(
    n: int, master_seed: int, n_levels: int = 3, spread: float = SPREAD
) -> List[PerturbationSample]:
    """
    `n` paired perturbations, reproducible from `master_seed`.

    A Philox stream keyed by the master seed draws one 64-bit seed per
    sample; each sample then draws its multiplier factors followed by its
    supply factors from its own Philox stream, uniform on
    [1 - spread, 1 + spread].
    """
    if n < 1:
        raise ValueError(f"At least one perturbation is required, got {n}")
    master = Generator(Philox(master_seed))
    seeds = master.integers(0, 2**SEED_BITS, size=n, dtype="uint64")
    samples = []
    for index, seed in enumerate(seeds):
        stream = Generator(Philox(int(seed)))
        multipliers = stream.uniform(1.0 - spread, 1.0 + spread, size=n_levels)
        supply = stream.uniform(1.0 - spread, 1.0 + spread, size=n_levels)
        samples.append(
            PerturbationSample(
                index=index,
                seed=int(seed),
                multiplier_factors=tuple(float(f) for f in multipliers),
                supply_factors=tuple(float(f) for f in supply),
            )
        )
    return samples


def identity_sample(n_levels: int) -> PerturbationSample:
    return PerturbationSample(
        index=0,
        seed=0,
        multiplier_factors=(1.0,) * n_levels,
        supply_factors=(1.0,) * n_levels,
    )


def perturb_scenario(s: Scenario, sample: PerturbationSample) -> Scenario:
    """Scale waiting time multipliers (demand) and capacities (supply)."""
    if len(sample.multiplier_factors) != s.n_levels:
        raise ValueError(
            f"Sample {sample.index} has {len(sample.multiplier_factors)} factors "
            f"for {s.n_levels} levels"
        )
    levels = tuple(
        level.model_copy(
            update={
                "multiplier": level.multiplier * m,
                "capacity": level.capacity * c,
            }
        )
        for level, m, c in zip(
            s.levels, sample.multiplier_factors, sample.supply_factors
        )
    )
    return s.model_copy(update={"levels": levels})
