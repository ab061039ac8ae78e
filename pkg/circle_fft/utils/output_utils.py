import csv
import json
import logging
import os
from pathlib import Path
from typing import Sequence, TextIO, Union

from circle_fft.models import BenchRecord, CostModelFit, RecurrenceReport
from circle_fft.utils.constants import BENCH_CSV_HEADER

logger = logging.getLogger("circle_fft.utils")

PathLike = Union[str, Path]


def _ensure_parent(file_path: PathLike) -> None:
    parent = os.path.dirname(os.fspath(file_path))
    if parent:
        os.makedirs(parent, exist_ok=True)


def write_bench_csv(records: Sequence[BenchRecord], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(BENCH_CSV_HEADER)
    for record in records:
        writer.writerow(record.to_csv_row())


def save_bench_csv(records: Sequence[BenchRecord], file_path: PathLike) -> None:
    """
    Save benchmark records as CSV: algorithm,N,repeats,median_seconds,mults,adds.

    Raises:
        OSError: If there's an error writing to the file
    """
    _ensure_parent(file_path)
    with open(file_path, "w", encoding="utf-8", newline="") as f:
        write_bench_csv(records, f)
    logger.info(f"Saved {len(records)} benchmark records to {file_path}")


def save_fit_json(fit: CostModelFit, file_path: PathLike, indent: int = 2) -> None:
    """
    Save the cost-model fit with keys c1, c2, r2_quadratic, r2_nlogn (plus slope diagnostics).

    Raises:
        OSError: If there's an error writing to the file
    """
    _ensure_parent(file_path)
    with open(file_path, "w", encoding="utf-8") as f:
        json.dump(fit.model_dump(mode="json"), f, indent=indent)
        f.write("\n")
    logger.info(f"Saved cost model fit to {file_path}")


def save_text(text: str, file_path: PathLike) -> None:
    """Write a UTF-8 text document (SVG, CSV) to disk."""
    _ensure_parent(file_path)
    with open(file_path, "w", encoding="utf-8") as f:
        f.write(text)
    logger.info(f"Saved {file_path}")


def format_recurrence_table(report: RecurrenceReport) -> str:
    """One row per level: measured and expected counts plus the naive and touch views."""
    header = f"{'N':>8} {'M(N)':>10} {'A(N)':>10} {'exp M':>10} {'exp A':>10} {'naive M':>12} {'touches':>10}  status"
    rows = [header]
    for level in report.levels:
        status = "ok" if level.ok else f"FAIL {level.message}"
        rows.append(
            f"{level.n:>8} {level.mults:>10} {level.adds:>10} {level.expected_mults:>10} "
            f"{level.expected_adds:>10} {level.naive_mults:>12} {level.touches:>10}  {status}"
        )
    return "\n".join(rows)
