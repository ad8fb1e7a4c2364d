import argparse
import csv
import io
from pathlib import Path
from typing import List

from carequeue_types import Equilibrium, Scenario
from carequeue_core.core.logger import Logger
from carequeue_core.equilibrium import solve
from carequeue_core.model import load_scenario
from .common import (
    add_format_flag,
    add_solver_flags,
    build_manifest,
    manifest_path,
    solver_settings,
    write_text,
)

CSV_FIELDS = ("quantity", "id", "value")


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "solve", help="Compute the choice and waiting time equilibrium of a scenario"
    )
    parser.add_argument("scenario", type=Path, help="Scenario JSON file")
    parser.add_argument("--out", type=Path, help="Write the equilibrium as JSON here")
    add_solver_flags(parser)
    add_format_flag(parser)
    parser.set_defaults(handler=run)


def _choice_columns(s: Scenario) -> List[str]:
    return ["opt-out"] + [level.id for level in s.levels]


def render_equilibrium_table(s: Scenario, eq: Equilibrium) -> str:
    """Waits to 2 decimals, probabilities to 4."""
    lines = [
        f"Equilibrium after {eq.iterations} iterations: "
        f"objective {eq.objective:.10g}, grad_norm {eq.grad_norm:.3e}",
        "",
    ]
    width = max(len(level.id) for level in s.levels)
    width = max([width, len("Level")] + [len(c.id) for c in s.classes])
    header = f"{'Wait (h)':>10}  {'Flow (patients/year)':>22}"
    lines.append(f"{'Level':<{width}}  {header}")
    for level, wait, flow in zip(s.levels, eq.waits, eq.flows):
        lines.append(f"{level.id:<{width}}  {wait:>10.2f}  {flow:>22,.0f}")
    lines.append("")

    columns = _choice_columns(s)
    widths = [max(10, len(c)) for c in columns]
    cells = [f"{c:>{w}}" for c, w in zip(columns, widths)]
    lines.append(f"{'Class':<{width}}  " + "  ".join(cells))
    for cls, row in zip(s.classes, eq.choice):
        values = "  ".join(f"{p:>{w}.4f}" for p, w in zip(row, widths))
        lines.append(f"{cls.id:<{width}}  {values}")
    return "\n".join(lines) + "\n"


def render_equilibrium_csv(s: Scenario, eq: Equilibrium) -> str:
    """Full-precision long format: one quantity per line."""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for level, wait in zip(s.levels, eq.waits):
        writer.writerow({"quantity": "wait", "id": level.id, "value": repr(wait)})
    for level, flow in zip(s.levels, eq.flows):
        writer.writerow({"quantity": "flow", "id": level.id, "value": repr(flow)})
    columns = _choice_columns(s)
    for cls, row in zip(s.classes, eq.choice):
        for column, p in zip(columns, row):
            writer.writerow(
                {"quantity": "choice", "id": f"{cls.id}:{column}", "value": repr(p)}
            )
    writer.writerow({"quantity": "objective", "id": "", "value": repr(eq.objective)})
    writer.writerow({"quantity": "grad_norm", "id": "", "value": repr(eq.grad_norm)})
    writer.writerow({"quantity": "iterations", "id": "", "value": eq.iterations})
    return buffer.getvalue()


def run(args: argparse.Namespace) -> int:
    s = load_scenario(args.scenario)
    cfg = solver_settings(args)
    Logger.pending(
        args.run_id,
        {"message": f"Solving {args.scenario}", "scenario": str(args.scenario)},
    )
    eq = solve(s, cfg)
    Logger.completed(
        args.run_id,
        {
            "message": f"Converged in {eq.iterations} iterations",
            "iterations": eq.iterations,
            "grad_norm": eq.grad_norm,
            "feasible": eq.feasible,
        },
    )

    if args.format == "csv":
        print(render_equilibrium_csv(s, eq), end="")
    else:
        print(render_equilibrium_table(s, eq), end="")
    if args.out is not None:
        write_text(args.out, eq.model_dump_json(indent=2))
        manifest = build_manifest(
            args, cfg, {"scenario": args.scenario}, {"scenario": s}
        )
        write_text(manifest_path(args.out), manifest.model_dump_json(indent=2))
    return 0
