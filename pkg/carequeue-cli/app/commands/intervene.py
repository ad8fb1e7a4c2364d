import argparse
from pathlib import Path

from carequeue_core.core.exceptions import NumericalError
from carequeue_core.core.logger import Logger
from carequeue_core.model import load_scenario
from carequeue_casestudy import resolve_intervention
from carequeue_casestudy.experiment import (
    render_comparison,
    render_csv,
    rows_from_outcome,
    unperturbed_outcome,
)
from .common import (
    add_format_flag,
    add_interventions_flag,
    add_solver_flags,
    build_manifest,
    extra_specs,
    intervention_inputs,
    manifest_path,
    solver_settings,
    write_text,
)


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "intervene",
        help="Compare the MNL-only model with the equilibrium for one intervention",
    )
    parser.add_argument("scenario", type=Path, help="Calibrated scenario JSON file")
    parser.add_argument(
        "intervention", help="Built-in intervention name or intervention spec file"
    )
    parser.add_argument("--out", type=Path, help="Write the comparison CSV here")
    add_interventions_flag(parser)
    add_solver_flags(parser)
    add_format_flag(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    s = load_scenario(args.scenario)
    iv = resolve_intervention(args.intervention, extra_specs=extra_specs(args))
    cfg = solver_settings(args)

    outcome = unperturbed_outcome(s, iv, cfg)
    if outcome.failure:
        Logger.error(
            args.run_id, {"message": outcome.failure, "intervention": iv.name}
        )
    rows = rows_from_outcome(outcome)
    csv_text = render_csv(rows)
    if args.format == "csv":
        print(csv_text, end="")
    else:
        print(render_comparison(rows, title=iv.name), end="")

    if args.out is not None:
        write_text(args.out, csv_text)
        manifest = build_manifest(
            args,
            cfg,
            {"scenario": args.scenario, **intervention_inputs(args)},
            {"scenario": s},
            intervention=iv.name,
        )
        write_text(manifest_path(args.out), manifest.model_dump_json(indent=2))
    return NumericalError.exit_code if outcome.failure else 0
