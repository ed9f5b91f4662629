"""Perron eigenpair by power iteration and reduction to constant row sums."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence, NonPositiveEntry
from .matrix import ReciprocalMatrix, SimilarityTransform, _as_array, _trusted

EIGEN_TOL = 1e-10
STEP_TOL = 1e-13
MAX_ITER = 100_000


@dataclass(frozen=True, eq=False)
class PerronResult:
    """Dominant eigenpair of a positive matrix.

    ``vector`` is normalized so its last entry is 1; ``residual`` is
    ``max_i |(A w)_i - lambda w_i| / lambda`` evaluated on the max-normalized
    vector.
    """

    eigenvalue: float
    vector: np.ndarray
    residual: float
    iterations: int

    def to_dict(self) -> dict:
        return {
            "eigenvalue": self.eigenvalue,
            "vector": self.vector.tolist(),
            "residual": self.residual,
            "iterations": self.iterations,
        }


def _residual(a: np.ndarray, u: np.ndarray) -> tuple[float, float]:
    au = a @ u
    lam = float(au.sum() / u.sum())
    return lam, float(np.abs(au - lam * u).max() / lam)


def perron(a, tol: float = EIGEN_TOL, max_iter: int = MAX_ITER) -> PerronResult:
    """Power iteration from the all-ones start vector.

    Stops once successive max-normalized iterates differ by at most
    ``STEP_TOL`` in the max norm and the eigen-residual is within ``tol``.
    """
    arr = _as_array(a)
    if np.any(~np.isfinite(arr)) or np.any(arr <= 0):
        raise NonPositiveEntry("power iteration requires a positive matrix")
    u = np.ones(arr.shape[0])
    for it in range(1, max_iter + 1):
        y = arr @ u
        y /= y.max()
        step = float(np.abs(y - u).max())
        u = y
        if step <= STEP_TOL:
            lam, res = _residual(arr, u)
            if res <= tol:
                break
    else:
        raise NoConvergence(max_iter)
    v = u / u[-1]
    v.setflags(write=False)
    return PerronResult(eigenvalue=lam, vector=v, residual=res, iterations=it)


def to_constant_row_sums(a, tol: float = EIGEN_TOL) -> tuple[SimilarityTransform, ReciprocalMatrix]:
    """Return ``(D, D A D^-1)`` with ``D = diag(perron vector)^-1``.

    The second element has all row sums equal to the Perron eigenvalue.
    """
    w = perron(a, tol=tol).vector
    transform = SimilarityTransform(1.0 / w)
    return transform, _trusted(transform.apply_matrix(_as_array(a)))


def geometric_mean_vector(a) -> np.ndarray:
    """Row-wise geometric means, normalized so the last entry is 1.

    This is the geometric mean of the columns, which is always an efficient
    vector for a reciprocal matrix.
    """
    logs = np.log(_as_array(a))
    g = np.exp(logs.mean(axis=1) - logs[-1].mean())
    g[-1] = 1.0
    return g
