import argparse
from pathlib import Path

from carequeue_casestudy.experiment import (
    build_report,
    load_study,
    render_csv,
    render_table,
    significance,
)
from .common import add_format_flag, write_text
from .study import study_title


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "report", help="Re-render a saved study without solving again"
    )
    parser.add_argument("outcomes", type=Path, help="outcomes.json of a study")
    parser.add_argument("--out", type=Path, help="Also write the rendering here")
    add_format_flag(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    record = load_study(args.outcomes)
    name = record.intervention.name
    tests = significance(record.outcomes, name, record.variables)
    rows = build_report(record.outcomes, tests, record.unperturbed)
    if args.format == "csv":
        text = render_csv(rows)
    else:
        title = study_title(name, len(record.outcomes), record.master_seed)
        text = render_table(rows, title=title)
    print(text, end="")
    if args.out is not None:
        write_text(args.out, text)
    return 0
