from .newton import solve, solve_from
from .objective import choice_matrix, flows_from_choice, theta
from .oracle import fixed_point_oracle, fixed_point_residual
from .saturation import check_nonsaturation

__all__ = [
    "check_nonsaturation",
    "choice_matrix",
    "fixed_point_oracle",
    "fixed_point_residual",
    "flows_from_choice",
    "solve",
    "solve_from",
    "theta",
]
