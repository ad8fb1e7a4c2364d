from typing import Optional, Tuple, Union

from pydantic import Field

from .base import FrozenModel
from .enums import EvaluationModel, StartMode


class SolverSettings(FrozenModel):
    """Knobs of the objective minimizer and the fixed-point oracle."""

    grad_tol: float = Field(
        1e-10,
        description="Sup-norm of the gradient divided by total demand",
        title="Gradient Tolerance",
    )
    max_iters: int = Field(200, description="Newton iterations", title="Max Iters")
    initial_waits: Union[StartMode, Tuple[float, ...]] = Field(
        StartMode.ZERO_FLOW,
        description="Start point: 'zero', 'reference' or explicit waits in hours",
        title="Initial Waits",
    )
    damping: float = Field(
        0.3, description="Relaxation factor of the fixed-point oracle", title="Damping"
    )
    feasibility_cap: float = Field(
        10.0,
        description="Waits above this many hours are infeasible",
        title="Feasibility Cap",
    )


class ObjectiveReport(FrozenModel):
    """Value, gradient and curvature verdict of the convex objective at w."""

    theta: float = Field(..., description="Objective value", title="Theta")
    gradient: Tuple[float, ...] = Field(
        ..., description="Gradient per level, patients/year", title="Gradient"
    )
    hessian: Tuple[Tuple[float, ...], ...] = Field(
        ..., description="Hessian over levels", title="Hessian"
    )
    hessian_pd: bool = Field(
        ..., description="Cholesky factorization succeeded", title="Hessian PD"
    )
    grad_norm: float = Field(
        ...,
        description="Gradient sup-norm divided by total demand",
        title="Gradient Norm",
    )


class Equilibrium(FrozenModel):
    """
    Waits, flows and choice matrix of one evaluated scenario.

    `choice` rows are classes; column 0 is the opt-out alternative followed by
    one column per level. Infinite waits mark saturated levels of the MNL-only
    model.
    """

    model: EvaluationModel = Field(
        EvaluationModel.EQUILIBRIUM, description="Producing model", title="Model"
    )
    waits: Tuple[float, ...] = Field(..., description="Hours per level", title="Waits")
    flows: Tuple[float, ...] = Field(
        ..., description="Patients per year per level", title="Flows"
    )
    choice: Tuple[Tuple[float, ...], ...] = Field(
        ..., description="Choice probabilities per class", title="Choice"
    )
    objective: Optional[float] = Field(
        None, description="Objective value at the waits", title="Objective"
    )
    grad_norm: Optional[float] = Field(
        None, description="Scaled gradient sup-norm", title="Gradient Norm"
    )
    feasible: bool = Field(
        ..., description="All waits within the feasibility cap", title="Feasible"
    )
    iterations: int = Field(0, description="Solver iterations", title="Iterations")


class NonSaturationCheck(FrozenModel):
    """Outcome of comparing total saturation with total demand."""

    holds: bool
    margin: float = Field(
        ..., description="Total saturation minus total demand, patients/year"
    )
    total_saturation: float
    total_demand: float
