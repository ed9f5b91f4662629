"""Matrix and vector file formats.

Two interchangeable matrix formats are supported:

* CSV: one matrix row per line, decimal entries;
* JSON: an object with ``order``, ``entries`` (list of rows) and an optional
  ``tolerance`` used for validation.

Writers emit 17 significant digits so every float round-trips exactly.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import numpy as np

from .errors import DimensionMismatch, ReciprocalError
from .matrix import FIXTURE_TOL, ReciprocalMatrix, _as_array, validate


class MatrixFormatError(ReciprocalError):
    pass


def fmt(x: float) -> str:
    return format(float(x), ".17g")


def _json_number_rows(arr: np.ndarray) -> str:
    return "[" + ", ".join("[" + ", ".join(fmt(v) for v in row) + "]" for row in arr) + "]"


def matrix_to_json(a, tolerance: float | None = None) -> str:
    arr = _as_array(a)
    parts = [f'"order": {arr.shape[0]}', f'"entries": {_json_number_rows(arr)}']
    if tolerance is not None:
        parts.append(f'"tolerance": {fmt(tolerance)}')
    return "{" + ", ".join(parts) + "}\n"


def matrix_to_csv(a) -> str:
    return "".join(",".join(fmt(v) for v in row) + "\n" for row in _as_array(a))


def parse_matrix_text(text: str) -> tuple[np.ndarray, float | None]:
    """Parse either format; returns the raw array and the optional tolerance."""
    stripped = text.strip()
    if not stripped:
        raise MatrixFormatError("empty matrix input")
    if stripped[0] in "{[":
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise MatrixFormatError(f"invalid JSON matrix: {exc}") from None
        if isinstance(obj, list):
            obj = {"entries": obj}
        if "entries" not in obj:
            raise MatrixFormatError('JSON matrix object needs an "entries" field')
        try:
            arr = np.array(obj["entries"], dtype=float)
        except (TypeError, ValueError) as exc:
            raise MatrixFormatError(f"non-numeric or ragged entries: {exc}") from None
        if "order" in obj and arr.ndim == 2 and int(obj["order"]) != arr.shape[0]:
            raise DimensionMismatch(f'"order" is {obj["order"]} but entries have {arr.shape[0]} rows')
        tol = obj.get("tolerance")
        return arr, None if tol is None else float(tol)
    rows = []
    for lineno, row in enumerate(csv.reader(io.StringIO(stripped)), start=1):
        cells = [c.strip() for c in row if c.strip()]
        if not cells:
            continue
        try:
            rows.append([float(c) for c in cells])
        except ValueError:
            raise MatrixFormatError(f"line {lineno}: non-numeric entry in {row!r}") from None
    if len({len(r) for r in rows}) != 1:
        raise MatrixFormatError("CSV rows have different lengths")
    return np.array(rows, dtype=float), None


def read_matrix(path, tol: float | None = None) -> ReciprocalMatrix:
    """Read and validate a matrix file (``-`` for standard input handled by callers).

    Validation tolerance: ``tol`` if given, else the file's own
    ``tolerance`` field, else :data:`FIXTURE_TOL`.
    """
    arr, file_tol = parse_matrix_text(Path(path).read_text())
    if tol is None:
        tol = file_tol if file_tol is not None else FIXTURE_TOL
    return validate(arr, tol)


def write_matrix(a, path, tolerance: float | None = None) -> None:
    path = Path(path)
    text = matrix_to_csv(a) if path.suffix.lower() == ".csv" else matrix_to_json(a, tolerance)
    path.write_text(text)


def parse_vector_text(text: str) -> np.ndarray:
    stripped = text.strip()
    if stripped.startswith("[") or stripped.startswith("{"):
        obj = json.loads(stripped)
        if isinstance(obj, dict):
            obj = obj.get("vector", obj.get("entries"))
        return np.array(obj, dtype=float).ravel()
    cells = [c for c in stripped.replace("\n", ",").split(",") if c.strip()]
    try:
        return np.array([float(c) for c in cells])
    except ValueError:
        raise MatrixFormatError(f"non-numeric vector entry in {stripped!r}") from None


def read_vector(path) -> np.ndarray:
    return parse_vector_text(Path(path).read_text())


def dumps(obj) -> str:
    """JSON dump with numpy scalars/arrays converted and stable key order."""

    def default(o):
        if isinstance(o, np.ndarray):
            return o.tolist()
        if isinstance(o, np.generic):
            return o.item()
        raise TypeError(f"cannot serialize {type(o).__name__}")

    return json.dumps(obj, default=default, indent=2) + "\n"
