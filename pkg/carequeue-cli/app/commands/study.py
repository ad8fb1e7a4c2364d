import argparse
from pathlib import Path
from typing import Any

from carequeue_types import StudyRecord
from carequeue_core.core.config import settings
from carequeue_core.model import load_scenario
from carequeue_casestudy import resolve_intervention
from carequeue_casestudy.experiment import (
    build_report,
    outcome_variables,
    render_csv,
    render_table,
    run_paired_study,
    sample_perturbations,
    save_study,
    significance,
    unperturbed_outcome,
)
from ..exceptions import UsageError
from .common import (
    add_format_flag,
    add_interventions_flag,
    add_solver_flags,
    build_manifest,
    extra_specs,
    intervention_inputs,
    solver_settings,
    write_text,
)

DEFAULT_INSTANCES = 1000
DEFAULT_SEED = 0

OUTCOMES_FILE = "outcomes.json"
CSV_FILE = "report.csv"
TABLE_FILE = "report.txt"
MANIFEST_FILE = "manifest.json"


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "study",
        help="Paired perturbation study of one intervention under both models",
    )
    parser.add_argument("scenario", type=Path, help="Calibrated scenario JSON file")
    parser.add_argument(
        "intervention", help="Built-in intervention name or intervention spec file"
    )
    parser.add_argument("n", type=int, nargs="?", help="Number of instances")
    parser.add_argument("seed_arg", type=int, nargs="?", metavar="seed")
    parser.add_argument("out_dir", type=Path, nargs="?", help="Output directory")
    parser.add_argument("--instances", type=int, help="Number of instances")
    parser.add_argument("--seed", type=int, help="Master seed of the perturbations")
    parser.add_argument("--out", type=Path, help="Output directory")
    parser.add_argument("--workers", type=int, help="Worker processes")
    add_interventions_flag(parser)
    add_solver_flags(parser)
    add_format_flag(parser)
    parser.set_defaults(handler=run)


def _pick(flag: Any, positional: Any, default: Any) -> Any:
    if flag is not None:
        return flag
    return positional if positional is not None else default


def study_title(name: str, instances: int, seed: int) -> str:
    return f"{name}: {instances} perturbed instances, seed {seed}"


def run(args: argparse.Namespace) -> int:
    instances = _pick(args.instances, args.n, DEFAULT_INSTANCES)
    seed = _pick(args.seed, args.seed_arg, DEFAULT_SEED)
    out_dir = _pick(args.out, args.out_dir, None)
    workers = args.workers if args.workers is not None else settings.WORKERS
    if instances < 1:
        raise UsageError(f"Number of instances must be at least 1, got {instances}")
    if workers < 1:
        raise UsageError(f"Number of workers must be at least 1, got {workers}")
    args.workers = workers

    s = load_scenario(args.scenario)
    iv = resolve_intervention(args.intervention, extra_specs=extra_specs(args))
    cfg = solver_settings(args)
    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)

    samples = sample_perturbations(instances, seed, s.n_levels)
    outcomes = run_paired_study(s, iv, samples, cfg, workers, args.run_id)
    variables = outcome_variables(s)
    record = StudyRecord(
        intervention=iv,
        master_seed=seed,
        variables=tuple(variables),
        unperturbed=unperturbed_outcome(s, iv, cfg),
        outcomes=tuple(outcomes),
    )
    rows = build_report(
        record.outcomes,
        significance(record.outcomes, iv.name, variables),
        record.unperturbed,
    )
    csv_text = render_csv(rows)
    table_text = render_table(rows, title=study_title(iv.name, instances, seed))
    print(csv_text if args.format == "csv" else table_text, end="")

    if out_dir is not None:
        save_study(record, out_dir / OUTCOMES_FILE)
        write_text(out_dir / CSV_FILE, csv_text)
        write_text(out_dir / TABLE_FILE, table_text)
        manifest = build_manifest(
            args,
            cfg,
            {"scenario": args.scenario, **intervention_inputs(args)},
            {"scenario": s},
            intervention=iv.name,
            instances=instances,
            master_seed=seed,
        )
        write_text(out_dir / MANIFEST_FILE, manifest.model_dump_json(indent=2))
    return 0
