"""Dense reciprocal matrices: validation, consistency, row sums and similarities.

A matrix ``A`` is reciprocal when every entry is positive and
``a_ji = 1 / a_ij``; it is consistent when ``a_ij * a_jk = a_ik`` for all
triples, i.e. when ``A = [w_i / w_j]`` for some positive vector ``w``.

Indices are 0-based throughout the Python API.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    NonPositiveEntry,
    NonUnitDiagonal,
    ReciprocityViolation,
)

RECIPROCITY_TOL = 1e-9
CONSISTENCY_TOL = 1e-8
FIXTURE_TOL = 1e-3

# slack on the sum-of-entries bound, loose enough for fixture-tolerance inputs
_ENTRY_SUM_SLACK = 1e-3


@dataclass(frozen=True, eq=False)
class ReciprocalMatrix:
    """Validated positive square matrix with reciprocal symmetry.

    Build instances with :func:`validate` (or the generators); the
    constructor itself performs no checks.
    """

    entries: np.ndarray

    def __post_init__(self):
        arr = np.array(self.entries, dtype=float, copy=True)
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.entries
        return self.entries.astype(dtype)

    def __getitem__(self, key):
        return self.entries[key]

    def __repr__(self):
        return f"ReciprocalMatrix(order={self.order}, entries={self.entries.tolist()!r})"

    def allclose(self, other, rtol=1e-9, atol=0.0) -> bool:
        other = np.asarray(other, dtype=float)
        return other.shape == self.entries.shape and bool(
            np.allclose(self.entries, other, rtol=rtol, atol=atol)
        )


@dataclass(frozen=True)
class RowSumProfile:
    sums: np.ndarray
    max_index: int
    min_index: int
    sorted_desc: tuple[int, ...]
    total: float

    @property
    def r_max(self) -> float:
        return float(self.sums[self.max_index])

    @property
    def r_min(self) -> float:
        return float(self.sums[self.min_index])


@dataclass(frozen=True, eq=False)
class SimilarityTransform:
    """Monomial similarity ``S = P D``.

    ``diagonal`` is the positive diagonal of ``D``; ``permutation`` maps new
    position ``i`` to old index ``permutation[i]``. Applied to a matrix it
    gives ``S A S^-1``, applied to a vector ``S w``.
    """

    diagonal: np.ndarray
    permutation: tuple[int, ...] = field(default=())

    def __post_init__(self):
        d = np.array(self.diagonal, dtype=float, copy=True)
        if d.ndim != 1 or np.any(~np.isfinite(d)) or np.any(d <= 0):
            raise NonPositiveEntry("similarity diagonal must be a finite positive vector")
        d.setflags(write=False)
        object.__setattr__(self, "diagonal", d)
        perm = tuple(int(p) for p in self.permutation) or tuple(range(d.size))
        if sorted(perm) != list(range(d.size)):
            raise DimensionMismatch("permutation does not match the diagonal length")
        object.__setattr__(self, "permutation", perm)

    @classmethod
    def identity(cls, n: int) -> "SimilarityTransform":
        return cls(np.ones(n))

    @property
    def order(self) -> int:
        return self.diagonal.size

    def apply_matrix(self, a: np.ndarray) -> np.ndarray:
        d = self.diagonal
        scaled = d[:, None] * np.asarray(a, dtype=float) / d[None, :]
        p = list(self.permutation)
        return scaled[np.ix_(p, p)]

    def apply_vector(self, w) -> np.ndarray:
        return (self.diagonal * np.asarray(w, dtype=float))[list(self.permutation)]

    def inverse(self) -> "SimilarityTransform":
        # (P D)^-1 = D^-1 P^T = P^T (P D^-1 P^T)
        p = list(self.permutation)
        return SimilarityTransform((1.0 / self.diagonal)[p], tuple(int(i) for i in np.argsort(p)))

    def to_dict(self) -> dict:
        return {
            "diagonal": self.diagonal.tolist(),
            "permutation": [p + 1 for p in self.permutation],
        }



def _as_array(a) -> np.ndarray:
    if isinstance(a, ReciprocalMatrix):
        return a.entries
    return np.asarray(a, dtype=float)


def _trusted(a: np.ndarray) -> ReciprocalMatrix:
    """Wrap an array known to be reciprocal by construction."""
    return ReciprocalMatrix(a)


def validate(entries, tol: float = RECIPROCITY_TOL) -> ReciprocalMatrix:
    """Check ``entries`` and return it as a :class:`ReciprocalMatrix`.

    Entries are stored as given; nothing is symmetrized or repaired.
    ``tol`` bounds both ``|a_ii - 1|`` and ``|a_ij * a_ji - 1|``. Use
    :data:`FIXTURE_TOL` for matrices transcribed with rounded entries.
    """
    a = np.array(_as_array(entries), dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n < 2:
        raise DimensionMismatch("a reciprocal matrix must have order at least 2")
    bad = ~np.isfinite(a) | (a <= 0)
    if bad.any():
        i, j = (int(k) for k in np.argwhere(bad)[0])
        raise NonPositiveEntry(f"entry ({i + 1}, {j + 1}) = {a[i, j]!r} is not a finite positive number")
    diag_dev = np.abs(np.diag(a) - 1.0)
    if diag_dev.max() > tol:
        i = int(diag_dev.argmax())
        raise NonUnitDiagonal(f"diagonal entry ({i + 1}, {i + 1}) = {a[i, i]!r} is not 1")
    dev = np.abs(a * a.T - 1.0)
    dev = np.triu(dev, 1)
    if dev.max() > tol:
        i, j = np.unravel_index(int(dev.argmax()), dev.shape)
        i, j = int(i), int(j)
        raise ReciprocityViolation(
            f"entries ({i + 1}, {j + 1}) = {a[i, j]!r} and ({j + 1}, {i + 1}) = {a[j, i]!r} "
            f"are not reciprocal (|a_ij a_ji - 1| = {dev[i, j]:.3g} > {tol:g})",
            pair=(i, j),
            deviation=float(dev[i, j]),
        )
    return ReciprocalMatrix(a)


def consistency_deviation(a) -> float:
    """Largest ``|log a_ij + log a_jk - log a_ik|`` over all triples."""
    logs = np.log(_as_array(a))
    worst = 0.0
    # loop over the middle index keeps memory at O(n^2)
    for j in range(logs.shape[0]):
        dev = np.abs(logs[:, j, None] + logs[None, j, :] - logs).max()
        worst = max(worst, float(dev))
    return worst


def is_consistent(a, tol: float = CONSISTENCY_TOL) -> bool:
    return consistency_deviation(a) <= tol


def as_weights(w, n: int | None = None) -> np.ndarray:
    """Return ``w`` as a positive float vector, optionally checking its length."""
    v = np.asarray(w, dtype=float)
    if v.ndim != 1:
        raise DimensionMismatch("weight vector must be one-dimensional")
    if n is not None and v.size != n:
        raise DimensionMismatch(f"weight vector has length {v.size}, expected {n}")
    if np.any(~np.isfinite(v)) or np.any(v <= 0):
        raise NonPositiveEntry("weight vector entries must be finite and positive")
    return v


def consistent_from_weights(w) -> ReciprocalMatrix:
    v = as_weights(w)
    if v.size < 2:
        raise DimensionMismatch("need at least two weights")
    return _trusted(v[:, None] / v[None, :])


def row_sums(a) -> RowSumProfile:
    arr = _as_array(a)
    n = arr.shape[0]
    sums = arr.sum(axis=1)
    total = float(sums.sum())
    # every reciprocal matrix has entry total >= n^2, with equality only for J_n
    assert total >= n * n * (1.0 - _ENTRY_SUM_SLACK), f"entry total {total} < n^2 = {n * n}"
    order = np.argsort(-sums, kind="stable")
    sums.setflags(write=False)
    return RowSumProfile(
        sums=sums,
        max_index=int(order[0]),
        min_index=int(order[-1]),
        sorted_desc=tuple(int(i) for i in order),
        total=total,
    )


def monomial_similarity(a, transform: SimilarityTransform) -> ReciprocalMatrix:
    arr = _as_array(a)
    if transform.order != arr.shape[0]:
        raise DimensionMismatch(
            f"transform of order {transform.order} cannot act on a matrix of order {arr.shape[0]}"
        )
    return _trusted(transform.apply_matrix(arr))


def _index_set(indices: Iterable[int], n: int) -> list[int]:
    idx = sorted({int(i) for i in indices})
    if idx and (idx[0] < 0 or idx[-1] >= n):
        raise IndexOutOfRange(f"indices {idx} out of range for order {n}")
    return idx


def principal_submatrix(a, deleted: Iterable[int] = ()) -> ReciprocalMatrix:
    """``A(K)``: delete the rows and columns listed in ``deleted``."""
    arr = _as_array(a)
    drop = set(_index_set(deleted, arr.shape[0]))
    keep = [i for i in range(arr.shape[0]) if i not in drop]
    return _trusted(arr[np.ix_(keep, keep)])


def retained_submatrix(a, kept: Sequence[int]) -> ReciprocalMatrix:
    """``A[K]``: keep only the rows and columns listed in ``kept``."""
    arr = _as_array(a)
    keep = _index_set(kept, arr.shape[0])
    return _trusted(arr[np.ix_(keep, keep)])


def ones(n: int) -> ReciprocalMatrix:
    """The all-ones matrix ``J_n``."""
    return _trusted(np.ones((n, n)))
