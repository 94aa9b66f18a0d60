"""
Report Writers
==============

CSV and JSON writers for the group-structure tables, coverage tables,
histograms and per-run listings.

Floats are written with a fixed number of decimals (percentages with
PERCENT_DECIMALS) and rows keep their given order, so identical inputs give
byte-identical files.
"""

import csv
import json
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from src.core.analysis import CoverageReport, Histogram, SummaryReport
from src.core.config import COVERAGE_COLUMNS, PERCENT_DECIMALS, SUMMARY_COLUMNS

logger = logging.getLogger(__name__)

VALUE_DECIMALS = 4

PathLike = Union[str, Path]


def format_cell(value: Any, decimals: int = VALUE_DECIMALS) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return f"{value:.{decimals}f}"
    return str(value)


def write_table(
    path: PathLike,
    rows: Iterable[Mapping[str, Any]],
    columns: Sequence[str],
    decimals: Union[int, Mapping[str, int]] = VALUE_DECIMALS,
) -> Path:
    """
    Write `rows` as CSV with the given column order.

    Args:
        decimals: Decimal places for float cells, either one value or a
            per-column mapping (columns not listed use VALUE_DECIMALS).
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    per_column = decimals if isinstance(decimals, Mapping) else {}
    default = VALUE_DECIMALS if isinstance(decimals, Mapping) else decimals

    count = 0
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.DictWriter(f, fieldnames=list(columns), lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({c: format_cell(row.get(c), per_column.get(c, default)) for c in columns})
            count += 1
    logger.debug(f"[REPORT] wrote {count} rows to {path}")
    return path


def write_summary_table(path: PathLike, entries: Sequence[Tuple[Mapping[str, Any], SummaryReport]]) -> Path:
    """
    Group-structure table: one row per entry.

    Each entry is (leading, report); `leading` must hold "network" and may add
    columns such as "method" or "runs", placed right after "network".
    """
    columns, rows = _table_rows(entries, SUMMARY_COLUMNS)
    return write_table(path, rows, columns)


def write_coverage_table(path: PathLike, entries: Sequence[Tuple[Mapping[str, Any], CoverageReport]]) -> Path:
    """Coverage table in percent, rounded to PERCENT_DECIMALS."""
    columns, rows = _table_rows(entries, COVERAGE_COLUMNS)
    pct_columns = {c: PERCENT_DECIMALS for c in COVERAGE_COLUMNS if c.endswith("_pct")}
    return write_table(path, rows, columns, decimals=pct_columns)


def _table_rows(entries, base_columns):
    extra: List[str] = []
    rows = []
    for leading, report in entries:
        extra.extend(k for k in leading if k != "network" and k not in extra)
        row = report.to_row(str(leading["network"]))
        row.update(leading)
        rows.append(row)
    columns = [base_columns[0]] + extra + list(base_columns[1:])
    return columns, rows


def write_histogram(path: PathLike, hist: Histogram) -> Path:
    """Two-column CSV: bin_center, density."""
    rows = [{"bin_center": c, "density": d} for c, d in hist.rows()]
    path = write_table(path, rows, ["bin_center", "density"], decimals=6)
    if hist.clamped:
        logger.info(f"[REPORT] {path.name}: {hist.clamped} values clamped into the edge bins")
    if hist.empty:
        logger.info(f"[REPORT] {path.name}: no values to bin")
    return path


def write_json(path: PathLike, data: Mapping[str, Any]) -> Path:
    """Pretty, key-sorted JSON document."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        json.dump(data, f, indent=2, sort_keys=True)
        f.write("\n")
    return path


def summary_to_dict(report: SummaryReport) -> Dict[str, Any]:
    row = report.to_row("")
    row.pop("network")
    row["empty"] = report.empty
    row["runs"] = report.runs
    return row


def coverage_to_dict(report: CoverageReport) -> Dict[str, Any]:
    row = report.to_row("")
    row.pop("network")
    row["runs"] = report.runs
    return row
