"""Labelled matrix and vector CSV files.

Layout: an optional block of ``#`` comment lines, a header row whose first
cell is blank and whose remaining cells are column labels, then one row per
sector holding the row label followed by its values. Decimal point, comma
separator, UTF-8, no thousands separators. A vector is the one-column case.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence, TextIO

import numpy as np

from .errors import CsvFormatError

ORIENTATION_NOTE = "orientation: row-to-column (row = producing sector, column = consuming sector)"


@dataclass(frozen=True)
class LabelledMatrix:
    values: np.ndarray
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]


def format_number(v: float) -> str:
    """12 significant digits; ``-0`` is written as ``0``."""
    if v == 0:
        return "0"
    return format(float(v), ".12g")


def _read_text(source) -> str:
    if isinstance(source, (str, Path)) and Path(source).exists():
        return Path(source).read_text(encoding="utf-8")
    if hasattr(source, "read"):
        return source.read()
    raise CsvFormatError(f"no such file: {source}")


def parse_matrix_csv(text: str, where: str = "<csv>") -> LabelledMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise CsvFormatError(f"{where}: no data rows")
    rows = list(csv.reader(lines))
    header, body = rows[0], rows[1:]
    if len(header) < 2:
        raise CsvFormatError(f"{where}: header needs a blank corner cell and at least one label")
    if not body:
        raise CsvFormatError(f"{where}: header present but no data rows")
    width = len(header)
    values = np.empty((len(body), width - 1))
    labels = []
    for r, row in enumerate(body):
        if len(row) != width:
            raise CsvFormatError(f"{where}: row {r + 1} has {len(row)} cells, header has {width}")
        labels.append(row[0].strip())
        for c, cell in enumerate(row[1:]):
            try:
                v = float(cell.strip())
            except ValueError:
                raise CsvFormatError(f"{where}: row {r + 1}, column {c + 1}: {cell!r} is not a number") from None
            if not math.isfinite(v):
                raise CsvFormatError(f"{where}: row {r + 1}, column {c + 1} is not finite")
            values[r, c] = v
    return LabelledMatrix(values, tuple(labels), tuple(h.strip() for h in header[1:]))


def read_matrix_csv(source) -> LabelledMatrix:
    return parse_matrix_csv(_read_text(source), str(source))


def read_vector_csv(source) -> tuple[np.ndarray, tuple[str, ...]]:
    """Read a one-column (or one-row) labelled table as a vector."""
    m = read_matrix_csv(source)
    if m.values.shape[1] == 1:
        return m.values[:, 0].copy(), m.row_labels
    if m.values.shape[0] == 1:
        return m.values[0].copy(), m.col_labels
    raise CsvFormatError(f"{source}: expected a single column of values, got shape {m.values.shape}")


def write_matrix_csv(values, row_labels: Sequence[str], col_labels: Sequence[str],
                     stream: TextIO | None = None, comments: Sequence[str] = (ORIENTATION_NOTE,)) -> str:
    values = np.atleast_2d(np.asarray(values, dtype=np.float64))
    buf = io.StringIO()
    for c in comments:
        buf.write(f"# {c}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([""] + list(col_labels))
    for label, row in zip(row_labels, values):
        w.writerow([label] + [format_number(v) for v in row])
    text = buf.getvalue()
    if stream is not None:
        stream.write(text)
    return text


def write_vector_csv(values, labels: Sequence[str], name: str = "value",
                     stream: TextIO | None = None, comments: Sequence[str] = ()) -> str:
    return write_matrix_csv(np.asarray(values, dtype=np.float64)[:, None], labels, [name],
                            stream=stream, comments=comments)
