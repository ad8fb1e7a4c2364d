import os
from dotenv import load_dotenv

from carequeue_types import SolverSettings

load_dotenv()


class Settings:
    def __init__(self) -> None:
        self.GRAD_TOL = float(os.getenv("CAREQUEUE_GRAD_TOL", "1e-10"))
        self.MAX_ITERS = int(os.getenv("CAREQUEUE_MAX_ITERS", "200"))
        self.FEASIBILITY_CAP = float(os.getenv("CAREQUEUE_FEASIBILITY_CAP", "10.0"))
        self.HOURS_PER_YEAR = float(os.getenv("CAREQUEUE_HOURS_PER_YEAR", "2088"))
        self.WORKERS = int(os.getenv("CAREQUEUE_WORKERS", "1"))
        self.LOG_LEVEL = os.getenv("CAREQUEUE_LOG_LEVEL", "INFO").upper()
        self.LOG_FORMAT = os.getenv("CAREQUEUE_LOG_FORMAT", "json").lower()

    def solver_settings(self, **overrides: object) -> SolverSettings:
        """Solver settings from the environment, with per-run overrides."""
        values = {
            "grad_tol": self.GRAD_TOL,
            "max_iters": self.MAX_ITERS,
            "feasibility_cap": self.FEASIBILITY_CAP,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return SolverSettings(**values)

    def snapshot(self) -> dict:
        return {
            "grad_tol": self.GRAD_TOL,
            "max_iters": self.MAX_ITERS,
            "feasibility_cap": self.FEASIBILITY_CAP,
            "hours_per_year": self.HOURS_PER_YEAR,
            "workers": self.WORKERS,
        }


settings = Settings()
