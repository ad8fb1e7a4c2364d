import argparse
from pathlib import Path
from typing import Dict, Union

from carequeue_core.core.config import settings
from carequeue_core.core.logger import Logger
from carequeue_core.model import load_scenario, save_scenario
from carequeue_casestudy import apply_calibration, calibrate, load_case_study
from .common import build_manifest, manifest_path, write_text

BUNDLED = "<bundled case study>"


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "calibrate",
        help="Fit capacity factors so the reference waits become the equilibrium",
    )
    parser.add_argument(
        "scenario",
        type=Path,
        nargs="?",
        help="Scenario JSON with reference_waits (default: the bundled case study)",
    )
    parser.add_argument(
        "--out", type=Path, help="Write the calibration result as JSON here"
    )
    parser.add_argument(
        "--scenario-out", type=Path, help="Write the calibrated scenario here"
    )
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    if args.scenario is None:
        s, _ = load_case_study(calibrated=False)
    else:
        s = load_scenario(args.scenario)
    source = str(args.scenario) if args.scenario is not None else BUNDLED

    result = calibrate(s)
    Logger.completed(
        args.run_id,
        {
            "message": f"Calibrated {source}",
            "capacity_factors": list(result.capacity_factors),
            "residual": result.residual,
        },
    )

    print(f"mild_share       {result.mild_share:.3f}")
    for level, factor, rate in zip(
        s.levels, result.capacity_factors, result.required_rates
    ):
        print(f"{level.id:<16} factor {factor:.6f}  rate {rate:.7f}/h")
    print(f"residual         {result.residual:.3e} h")

    inputs: Dict[str, Union[str, Path]] = {"scenario": source}
    cfg = settings.solver_settings()
    if args.out is not None:
        write_text(args.out, result.model_dump_json(indent=2))
        manifest = build_manifest(args, cfg, inputs, {"scenario": s})
        write_text(manifest_path(args.out), manifest.model_dump_json(indent=2))
    if args.scenario_out is not None:
        save_scenario(apply_calibration(s, result), args.scenario_out)
    return 0
