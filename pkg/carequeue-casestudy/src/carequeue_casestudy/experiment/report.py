import csv
import io
from pathlib import Path
from statistics import fmean
from typing import List, Optional, Sequence, Union

from carequeue_types import (
    PairedOutcome,
    ReportRow,
    SignificanceReport,
    StudyRecord,
)
from carequeue_core.core.exceptions import ScenarioParseError

CSV_FIELDS = (
    "variable",
    "mnl",
    "equilibrium",
    "mean_mnl",
    "mean_equilibrium",
    "sign_verdict",
    "nonzero",
    "feasible_mnl",
    "feasible_eq",
)


def _mean(values: List[float]) -> Optional[float]:
    return fmean(values) if values else None


def build_report(
    outcomes: Sequence[PairedOutcome],
    tests: SignificanceReport,
    unperturbed: Optional[PairedOutcome] = None,
) -> List[ReportRow]:
    """
    One row per outcome variable: unperturbed values of both models, their
    means over each model's feasible instances, and the test results.
    """
    if not outcomes:
        return []
    rows = []
    for entry in tests.variables:
        variable = entry.variable
        mnl_values = [
            v
            for o in outcomes
            if o.feasible_mnl and (v := o.value(variable).mnl_value) is not None
        ]
        eq_values = [
            v
            for o in outcomes
            if o.feasible_eq
            and o.failure is None
            and (v := o.value(variable).equilibrium_value) is not None
        ]
        base = unperturbed.value(variable) if unperturbed is not None else None
        rows.append(
            ReportRow(
                variable=variable,
                mnl=base.mnl_value if base else None,
                equilibrium=base.equilibrium_value if base else None,
                mean_mnl=_mean(mnl_values),
                mean_equilibrium=_mean(eq_values),
                sign_verdict=entry.sign_verdict,
                nonzero=entry.nonzero_flag,
                feasible_mnl=len(mnl_values),
                feasible_eq=len(eq_values),
            )
        )
    return rows


def rows_from_outcome(outcome: PairedOutcome) -> List[ReportRow]:
    """Rows comparing both models on one instance, without test columns."""
    return [
        ReportRow(
            variable=value.variable,
            mnl=value.mnl_value,
            equilibrium=value.equilibrium_value,
            feasible_mnl=int(outcome.feasible_mnl),
            feasible_eq=int(outcome.feasible_eq),
        )
        for value in outcome.values
    ]


def render_csv(rows: Sequence[ReportRow]) -> str:
    """Full-precision CSV, one line per row."""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        record = row.model_dump(mode="json")
        record["nonzero"] = "*" if row.nonzero else ""
        writer.writerow({field: record[field] for field in CSV_FIELDS})
    return buffer.getvalue()


def _format(variable: str, value: Optional[float]) -> str:
    if value is None:
        return "inf" if variable.startswith("W(") else "-"
    digits = 2 if variable.startswith("W(") else 4
    return f"{value:.{digits}f}"


def render_table(rows: Sequence[ReportRow], title: str = "") -> str:
    """
    Aligned text table: probabilities to 4 decimals, waits to 2. Mean columns
    carry the feasible instance count when it differs from the others.
    """
    header = ["Variable", "MNL", "1-4", "Mean MNL", "Mean 1-4", "Sign", "Nonzero"]
    counts = {(row.feasible_mnl, row.feasible_eq) for row in rows}
    lines = []
    for row in rows:
        mean_mnl = _format(row.variable, row.mean_mnl)
        mean_eq = _format(row.variable, row.mean_equilibrium)
        if len(counts) > 1 or row.feasible_mnl != row.feasible_eq:
            mean_mnl += f" ({row.feasible_mnl})"
            mean_eq += f" ({row.feasible_eq})"
        lines.append(
            [
                row.variable,
                _format(row.variable, row.mnl),
                _format(row.variable, row.equilibrium),
                mean_mnl,
                mean_eq,
                row.sign_verdict.value,
                "*" if row.nonzero else "",
            ]
        )
    return _align(header, lines, title)


def _align(header: List[str], lines: List[List[str]], title: str) -> str:
    widths = [
        max(len(cells[i]) for cells in [header] + lines) for i in range(len(header))
    ]
    text = [title] if title else []
    for cells in [header] + lines:
        first = cells[0].ljust(widths[0])
        rest = [cell.rjust(width) for cell, width in zip(cells[1:], widths[1:])]
        text.append("  ".join([first] + rest).rstrip())
    return "\n".join(text) + "\n"


def render_comparison(rows: Sequence[ReportRow], title: str = "") -> str:
    """Unperturbed values of both models side by side with their difference."""
    header = ["Variable", "MNL", "1-4", "Difference"]
    lines = []
    for row in rows:
        if row.mnl is None or row.equilibrium is None:
            difference = "-"
        else:
            digits = 2 if row.variable.startswith("W(") else 4
            difference = f"{row.equilibrium - row.mnl:+.{digits}f}"
        lines.append(
            [
                row.variable,
                _format(row.variable, row.mnl),
                _format(row.variable, row.equilibrium),
                difference,
            ]
        )
    return _align(header, lines, title)


def save_study(record: StudyRecord, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(record.model_dump_json(indent=2), encoding="utf-8")
    return path


def load_study(path: Union[str, Path]) -> StudyRecord:
    path = Path(path)
    try:
        return StudyRecord.model_validate_json(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise ScenarioParseError(f"Cannot read study file {path}: {e}") from e
    except ValueError as e:
        raise ScenarioParseError(f"Malformed study file {path}: {e}") from e
