from typing import Optional, Tuple

from pydantic import Field

from .base import FrozenModel
from .enums import SignVerdict
from .intervention import InterventionSpec


class PerturbationSample(FrozenModel):
    """Perturbation factors applied identically to both models of a pair."""

    index: int = Field(..., description="Position in the sample list", title="Index")
    seed: int = Field(..., description="Seed the factors derive from", title="Seed")
    multiplier_factors: Tuple[float, ...] = Field(
        ..., description="Factor per level on the waiting time multiplier"
    )
    supply_factors: Tuple[float, ...] = Field(
        ..., description="Factor per level on the capacity"
    )


class VariableOutcome(FrozenModel):
    """
    One outcome variable of one instance. None marks an unbounded or
    unavailable value.
    """

    variable: str = Field(..., description="e.g. 'P(OO|M)' or 'W(2)'", title="Variable")
    mnl_value: Optional[float] = None
    equilibrium_value: Optional[float] = None
    difference: Optional[float] = Field(
        None, description="equilibrium - mnl when both models are feasible"
    )


class PairedOutcome(FrozenModel):
    index: int = Field(..., title="Index")
    seed: int = Field(..., title="Seed")
    fingerprint: str = Field(
        ..., description="SHA-256 of the perturbed scenario", title="Fingerprint"
    )
    values: Tuple[VariableOutcome, ...] = Field(default_factory=tuple)
    feasible_mnl: bool = False
    feasible_eq: bool = False
    failure: Optional[str] = Field(
        None, description="Solver failure message; the instance is dropped"
    )

    def value(self, variable: str) -> VariableOutcome:
        for outcome in self.values:
            if outcome.variable == variable:
                return outcome
        raise KeyError(variable)


class VariableSignificance(FrozenModel):
    variable: str
    positive_count: int
    negative_count: int
    sign_verdict: SignVerdict
    nonzero_flag: bool


class SignificanceReport(FrozenModel):
    """Sign and nonzero tests per outcome variable of one study."""

    intervention: str
    instances: int = Field(..., description="Instances sampled", title="Instances")
    feasible_count: int = Field(
        ..., description="Instances feasible for both models", title="Feasible"
    )
    feasible_mnl: int
    feasible_eq: int
    failure_count: int
    variables: Tuple[VariableSignificance, ...]

    def for_variable(self, variable: str) -> VariableSignificance:
        for entry in self.variables:
            if entry.variable == variable:
                return entry
        raise KeyError(variable)


class ReportRow(FrozenModel):
    """One row of a study table."""

    variable: str
    mnl: Optional[float] = Field(None, description="Unperturbed MNL-only value")
    equilibrium: Optional[float] = Field(None, description="Unperturbed equilibrium")
    mean_mnl: Optional[float] = Field(None, description="Mean over feasible instances")
    mean_equilibrium: Optional[float] = None
    sign_verdict: SignVerdict = SignVerdict.NONE
    nonzero: bool = False
    feasible_mnl: int = 0
    feasible_eq: int = 0


class StudyRecord(FrozenModel):
    """Everything a saved study needs to be re-reported without re-solving."""

    intervention: InterventionSpec
    master_seed: int = Field(..., title="Master Seed")
    variables: Tuple[str, ...] = Field(..., description="Outcome variable labels")
    unperturbed: PairedOutcome = Field(
        ..., description="Both models on the scenario without perturbation"
    )
    outcomes: Tuple[PairedOutcome, ...] = Field(default_factory=tuple)
