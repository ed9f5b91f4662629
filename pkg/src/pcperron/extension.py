"""One-row, one-column extensions of reciprocal matrices.

Every ``B`` of order ``n-1`` has exactly one extension of order ``n`` with a
prescribed Perron vector. Conjugating by a suitable positive diagonal
reduces everything to the case of Perron vector all-ones, where the new
column is ``(r_max - r_i) + x`` with ``x`` the root of the extension
function of ``B``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ConsistentInputAtFullOrder, DimensionMismatch, NonPositiveEntry, NotConstantRowSums
from .generators import has_constant_row_sums
from .matrix import (
    CONSISTENCY_TOL,
    ReciprocalMatrix,
    SimilarityTransform,
    _as_array,
    _trusted,
    as_weights,
    consistency_deviation,
    row_sums,
)
from .spectral import perron
from .wellbehaved import closed_form_root, root_from_row_sums

GROWTH_SCALE = 9.0
GROWTH_ATTEMPTS = 100


@dataclass(frozen=True, eq=False)
class ExtensionResult:
    matrix: ReciprocalMatrix
    root_x: float | None
    transform: SimilarityTransform
    target_perron: np.ndarray
    warnings: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "matrix": self.matrix.entries.tolist(),
            "root_x": self.root_x,
            "transform": self.transform.to_dict(),
            "target_perron": np.asarray(self.target_perron).tolist(),
            "warnings": list(self.warnings),
        }


def _border(core: np.ndarray, column: np.ndarray) -> np.ndarray:
    k = core.shape[0]
    out = np.empty((k + 1, k + 1))
    out[:k, :k] = core
    out[:k, k] = column
    out[k, :k] = 1.0 / column
    out[k, k] = 1.0
    return out


def _constant_row_sum_border(b: np.ndarray) -> tuple[np.ndarray, float]:
    sums = row_sums(b).sums
    x = root_from_row_sums(sums)
    return sums.max() - sums + x, x


def extend_constant_row_sums(b) -> ExtensionResult:
    """Unique extension of ``B`` with all row sums equal (Perron vector all-ones)."""
    arr = _as_array(b)
    column, x = _constant_row_sum_border(arr)
    n = arr.shape[0] + 1
    return ExtensionResult(
        matrix=_trusted(_border(arr, column)),
        root_x=x,
        transform=SimilarityTransform.identity(n),
        target_perron=np.ones(n),
    )


def extend_with_perron(b, w) -> ExtensionResult:
    """Unique ``A`` with ``A(n) = B`` whose Perron vector is proportional to ``w``."""
    arr = _as_array(b)
    n = arr.shape[0] + 1
    v = as_weights(w, n)
    head = v[:-1]
    # B' = D(n)^-1 B D(n) has Perron-compatible all-ones target
    reduced = arr * head[None, :] / head[:, None]
    column, x = _constant_row_sum_border(reduced)
    a_reduced = _border(reduced, column)
    d = SimilarityTransform(v)
    result = d.apply_matrix(a_reduced)
    # the leading block equals B exactly; drop conjugation round-off
    result[:-1, :-1] = arr
    return ExtensionResult(
        matrix=_trusted(result),
        root_x=x,
        transform=d,
        target_perron=v / v[-1],
    )


def border_constant_column(t, a: float) -> ExtensionResult:
    """``[[T, a e], [e^T / a, 1]]`` for constant-row-sum ``T``.

    The Perron vector is proportional to ``(1, ..., 1, x0)`` with ``x0 = x / a`` and ``x``
    the closed-form root for row sum ``r`` and order ``n-1``. When ``T`` is
    inconsistent that vector is inefficient and vertex ``n`` is a sink.
    """
    arr = _as_array(t)
    if not has_constant_row_sums(arr):
        raise NotConstantRowSums("T must have constant row sums")
    a = float(a)
    if not (np.isfinite(a) and a > 0):
        raise NonPositiveEntry(f"border value must be positive, got {a!r}")
    k = arr.shape[0]
    r = float(arr.sum(axis=1).mean())
    x = closed_form_root(r, k)
    target = np.ones(k + 1)
    target[-1] = x / a
    return ExtensionResult(
        matrix=_trusted(_border(arr, np.full(k, a))),
        root_x=x,
        transform=SimilarityTransform.identity(k + 1),
        target_perron=target / target[-1],
    )


def _grow_random(b: np.ndarray, order: int, rng: np.random.Generator) -> np.ndarray:
    s = b
    half = np.log(GROWTH_SCALE)
    while s.shape[0] < order:
        column = np.exp(rng.uniform(-half, half, size=s.shape[0]))
        s = _border(s, column)
    return s


def _consistency_warnings(dev: float) -> list[str]:
    if dev <= 10 * CONSISTENCY_TOL:
        return [
            f"intermediate matrix is nearly consistent (log deviation {dev:.3g}); "
            "the inefficiency margin may be numerically tiny"
        ]
    return []


def extend_inefficient(
    b,
    target_order: int,
    a: float = 1.0,
    c: float = 1.0,
    seed=None,
    intermediate=None,
) -> ExtensionResult:
    """Extend ``B`` (order ``k``) to order ``n`` with an inefficient Perron vector.

    An inconsistent ``S`` of order ``n-1`` with ``S[{1..k}] = B`` is either
    supplied as ``intermediate`` or grown by seeded random bordering. With
    ``R = diag(perron(S))^-1`` and ``C = R S R^-1`` the result is
    ``D^-1 [[C, a e], [e^T / a, 1]] D`` where ``D = R (+) [c]``. Its last
    principal deletion is ``S`` and vertex ``n`` is a sink of its digraph.
    """
    arr = _as_array(b)
    k = arr.shape[0]
    n = int(target_order)
    if k >= n:
        raise DimensionMismatch(f"target order {n} must exceed the input order {k}")
    for name, val in (("a", a), ("c", c)):
        if not (np.isfinite(val) and val > 0):
            raise NonPositiveEntry(f"{name} must be positive, got {val!r}")

    if intermediate is not None:
        s = _as_array(intermediate)
        if s.shape != (n - 1, n - 1):
            raise DimensionMismatch(f"intermediate matrix must have order {n - 1}")
        if not np.allclose(s[:k, :k], arr, rtol=1e-12, atol=0.0):
            raise DimensionMismatch("intermediate matrix does not contain B as its leading block")
        dev = consistency_deviation(s)
        if dev <= CONSISTENCY_TOL:
            raise ConsistentInputAtFullOrder("intermediate matrix must be inconsistent")
    elif k == n - 1:
        s = arr
        dev = consistency_deviation(s)
        if dev <= CONSISTENCY_TOL:
            raise ConsistentInputAtFullOrder(
                "B is consistent and only one row is added: every such extension has an "
                "efficient Perron vector, so no inefficient extension exists"
            )
    else:
        rng = np.random.default_rng(seed)
        for _ in range(GROWTH_ATTEMPTS):
            s = _grow_random(arr, n - 1, rng)
            dev = consistency_deviation(s)
            if dev > CONSISTENCY_TOL:
                break
        else:
            raise ConsistentInputAtFullOrder("random growth kept producing consistent matrices")

    v = perron(s).vector
    r = SimilarityTransform(1.0 / v)
    cmat = r.apply_matrix(s)
    a_prime = _border(cmat, np.full(n - 1, float(a)))
    d = SimilarityTransform(np.append(1.0 / v, float(c)))
    result = d.inverse().apply_matrix(a_prime)
    result[:-1, :-1] = s
    # Perron vector of A' is (e, x/a) with x the closed-form root for C
    rc = float(cmat.sum(axis=1).mean())
    x = closed_form_root(rc, n - 1)
    target = np.append(v, x / (float(a) * float(c)))
    return ExtensionResult(
        matrix=_trusted(result),
        root_x=x,
        transform=d,
        target_perron=target / target[-1],
        warnings=_consistency_warnings(dev),
    )


def extend_efficient(b, column: int = 0) -> ExtensionResult:
    """Extend ``B`` by one row so the result has an efficient Perron vector.

    Scaling by ``D^-1 = diag(B[:, column])`` turns row and column ``column``
    into ones; the scaled matrix is well-behaved with all-ones efficient, so
    its constant-row-sum extension has an efficient Perron vector. The
    result is conjugated back, giving Perron vector ``(B[:, column], 1)``.
    """
    arr = _as_array(b)
    k = arr.shape[0]
    if not 0 <= column < k:
        raise DimensionMismatch(f"column {column} out of range for order {k}")
    col = arr[:, column].copy()
    d = SimilarityTransform(1.0 / col)
    scaled = d.apply_matrix(arr)
    border, x = _constant_row_sum_border(scaled)
    a_prime = _border(scaled, border)
    back = SimilarityTransform(np.append(1.0 / col, 1.0))
    result = back.inverse().apply_matrix(a_prime)
    result[:-1, :-1] = arr
    return ExtensionResult(
        matrix=_trusted(result),
        root_x=x,
        transform=back,
        target_perron=np.append(col, 1.0),
    )
