import argparse
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from carequeue_types import InterventionSpec, Scenario, SolverSettings, StartMode
from carequeue_core import __version__
from carequeue_core.core.config import settings
from carequeue_casestudy import load_intervention_specs
from ..exceptions import UsageError
from ..schemas import RunManifest

FORMATS = ("table", "csv")


def add_solver_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("solver")
    group.add_argument("--grad-tol", type=float, help="Scaled gradient tolerance")
    group.add_argument("--max-iters", type=int, help="Newton iteration limit")
    group.add_argument(
        "--start",
        choices=[mode.value for mode in StartMode],
        help="Start from zero-flow waits or the scenario's reference waits",
    )
    group.add_argument(
        "--feasibility-cap", type=float, help="Waits above this many hours fail"
    )


def add_format_flag(parser: argparse.ArgumentParser, default: str = "table") -> None:
    parser.add_argument(
        "--format", choices=FORMATS, default=default, help="Standard output format"
    )


def add_interventions_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--interventions",
        type=Path,
        help="JSON file of user intervention specs, looked up by name",
    )


def solver_settings(args: argparse.Namespace) -> SolverSettings:
    if args.grad_tol is not None and args.grad_tol <= 0:
        raise UsageError(f"--grad-tol must be positive, got {args.grad_tol}")
    if args.max_iters is not None and args.max_iters < 1:
        raise UsageError(f"--max-iters must be at least 1, got {args.max_iters}")
    return settings.solver_settings(
        grad_tol=args.grad_tol,
        max_iters=args.max_iters,
        initial_waits=StartMode(args.start) if args.start else None,
        feasibility_cap=args.feasibility_cap,
    )


def extra_specs(args: argparse.Namespace) -> List[InterventionSpec]:
    path = getattr(args, "interventions", None)
    return load_intervention_specs(path) if path is not None else []


def intervention_inputs(args: argparse.Namespace) -> Dict[str, Union[str, Path]]:
    """Input files an intervention lookup read, for the manifest."""
    inputs: Dict[str, Union[str, Path]] = {}
    if Path(args.intervention).is_file():
        inputs["intervention"] = args.intervention
    if getattr(args, "interventions", None) is not None:
        inputs["interventions"] = args.interventions
    return inputs


def settings_snapshot(cfg: SolverSettings, **extra: Any) -> Dict[str, Any]:
    snapshot = settings.snapshot()
    snapshot.update(cfg.model_dump(mode="json"))
    snapshot.update(extra)
    return snapshot


def build_manifest(
    args: argparse.Namespace,
    cfg: SolverSettings,
    inputs: Dict[str, Union[str, Path]],
    scenarios: Optional[Dict[str, Scenario]] = None,
    **fields: Any,
) -> RunManifest:
    workers = getattr(args, "workers", None)
    return RunManifest(
        command=args.command,
        run_id=args.run_id,
        inputs={role: str(path) for role, path in inputs.items()},
        input_fingerprints={
            role: s.fingerprint() for role, s in (scenarios or {}).items()
        },
        settings=settings_snapshot(
            cfg, **({"workers": workers} if workers is not None else {})
        ),
        version=__version__,
        **fields,
    )


def manifest_path(out: Path) -> Path:
    return out.with_name(f"{out.stem}.manifest.json")


def write_text(path: Path, text: str) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    return path
