"""Order-4 matrices: inefficiency of the Perron vector is decided by a sink.

An order-4 reciprocal matrix has an inefficient Perron vector exactly when
its constant-row-sum form has a row whose off-diagonal entries all exceed 1.
:func:`characterize_4x4` computes that witness and cross-checks it against
the digraph verdict.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .efficiency import EDGE_TOL, is_efficient
from .errors import InternalInconsistency, NotFound, WrongOrder
from .matrix import ReciprocalMatrix, _as_array, principal_submatrix
from .spectral import perron, to_constant_row_sums


@dataclass(frozen=True, eq=False)
class Char4Witness:
    inefficient: bool
    sink_vertices: list[int]
    diagonal: np.ndarray
    constant_row_sum_form: ReciprocalMatrix
    dominating_row: int | None
    perron_vector: np.ndarray

    def to_dict(self) -> dict:
        """Serializable form; vertex labels are 1-based."""
        return {
            "inefficient": self.inefficient,
            "sinks": [v + 1 for v in self.sink_vertices],
            "diagonal": self.diagonal.tolist(),
            "B": self.constant_row_sum_form.entries.tolist(),
            "dominating_row": None if self.dominating_row is None else self.dominating_row + 1,
            "perron_vector": self.perron_vector.tolist(),
        }


def _require_order4(arr: np.ndarray) -> None:
    if arr.shape != (4, 4):
        raise WrongOrder(f"expected a 4x4 matrix, got shape {arr.shape}")


def dominating_rows(b: np.ndarray, edge_tol: float = EDGE_TOL) -> list[int]:
    """Rows whose off-diagonal entries all exceed 1.

    Uses the same relaxation as the digraph edge rule, so an entry equal to
    1 counts as an outgoing edge rather than as "greater than 1".
    """
    above = b * (1.0 - edge_tol) > 1.0
    np.fill_diagonal(above, True)
    return [int(i) for i in np.flatnonzero(above.all(axis=1))]


def characterize_4x4(a, edge_tol: float = EDGE_TOL) -> Char4Witness:
    arr = _as_array(a)
    _require_order4(arr)
    w = perron(arr).vector
    transform, b = to_constant_row_sums(arr)
    report = is_efficient(arr, w, edge_tol)
    rows = dominating_rows(b.entries, edge_tol)

    inefficient = not report.efficient
    if not (inefficient == bool(rows) == bool(report.sinks)) or (rows and rows != report.sinks):
        raise InternalInconsistency(
            f"criteria disagree: inefficient={inefficient}, dominating rows={rows}, "
            f"sinks={report.sinks}"
        )
    return Char4Witness(
        inefficient=inefficient,
        sink_vertices=report.sinks,
        diagonal=transform.diagonal,
        constant_row_sum_form=b,
        dominating_row=rows[0] if rows else None,
        perron_vector=w,
    )


def subvector_guarantee_4x4(a, edge_tol: float = EDGE_TOL) -> int:
    """Smallest ``i`` with ``w(i)`` efficient for ``A(i)``, ``w`` the Perron vector."""
    arr = _as_array(a)
    _require_order4(arr)
    w = perron(arr).vector
    for i in range(4):
        if is_efficient(principal_submatrix(arr, [i]), np.delete(w, i), edge_tol).efficient:
            return i
    raise NotFound("no 3-subvector of the Perron vector is efficient")
