"""Structured inconsistent constant-row-sum families and seeded random matrices."""

from __future__ import annotations

import numpy as np

from .errors import (
    ConsistentInput,
    NotConstantRowSums,
    NonPositiveEntry,
    OrderNotOdd,
    OrderTooSmall,
    ShapeMismatch,
)
from .matrix import (
    RECIPROCITY_TOL,
    ReciprocalMatrix,
    _as_array,
    _trusted,
    consistent_from_weights,
    is_consistent,
    validate,
)
from .wellbehaved import closed_form_root

CONSTANT_ROW_SUM_TOL = 1e-9
DEFAULT_SCALE = 9.0


def _positive(b: float, name: str = "b") -> float:
    b = float(b)
    if not (np.isfinite(b) and b > 0):
        raise NonPositiveEntry(f"{name} must be a finite positive number, got {b!r}")
    return b


def row_sum_spread(a) -> float:
    """Relative spread ``(max - min) / max`` of the row sums."""
    s = _as_array(a).sum(axis=1)
    return float((s.max() - s.min()) / s.max())


def has_constant_row_sums(a, tol: float = CONSTANT_ROW_SUM_TOL) -> bool:
    return row_sum_spread(a) <= tol


def bozoki(k: int, b: float) -> ReciprocalMatrix:
    """Circulant with ``b`` on the cyclic superdiagonal and ``1/b`` on the cyclic subdiagonal."""
    if k < 3:
        raise OrderTooSmall(f"order must be at least 3, got {k}")
    b = _positive(b)
    t = np.ones((k, k))
    for i in range(k):
        t[i, (i + 1) % k] = b
        t[i, (i - 1) % k] = 1.0 / b
    return _trusted(t)


def toeplitz_alt(k: int, b: float) -> ReciprocalMatrix:
    """Reciprocal Toeplitz matrix with first row ``(1, b, 1/b, b, 1/b, ..., b, 1/b)``."""
    if k < 3:
        raise OrderTooSmall(f"order must be at least 3, got {k}")
    if k % 2 == 0:
        raise OrderNotOdd(f"order must be odd, got {k}")
    b = _positive(b)
    first = np.array([1.0] + [b if m % 2 else 1.0 / b for m in range(1, k)])
    t = np.empty((k, k))
    for i in range(k):
        for j in range(k):
            t[i, j] = first[j - i] if j >= i else 1.0 / first[i - j]
    return _trusted(t)


def block_double(t0, t1) -> ReciprocalMatrix:
    """``[[T0, T1], [T1, T0]]`` for constant-row-sum reciprocal blocks of equal order."""
    a0, a1 = _as_array(t0), _as_array(t1)
    if a0.shape != a1.shape or a0.ndim != 2 or a0.shape[0] != a0.shape[1]:
        raise ShapeMismatch(f"blocks must be square of equal order, got {a0.shape} and {a1.shape}")
    # the off-diagonal blocks pair T1 with itself, so T1 must be reciprocal
    validate(a0, RECIPROCITY_TOL)
    validate(a1, RECIPROCITY_TOL)
    for name, blk in (("T0", a0), ("T1", a1)):
        if not has_constant_row_sums(blk):
            raise NotConstantRowSums(f"{name} does not have constant row sums")
    out = np.block([[a0, a1], [a1, a0]])
    return validate(out, RECIPROCITY_TOL)


def bordered_growth(t0) -> ReciprocalMatrix:
    """Border an inconsistent constant-row-sum matrix so row sums stay constant."""
    a = _as_array(t0)
    if not has_constant_row_sums(a):
        raise NotConstantRowSums("input does not have constant row sums")
    if is_consistent(a):
        raise ConsistentInput("bordered growth needs an inconsistent input")
    k = a.shape[0]
    r = float(a.sum(axis=1).mean())
    x = closed_form_root(r, k)
    out = np.ones((k + 1, k + 1))
    out[:k, :k] = a
    out[:k, k] = x
    out[k, :k] = 1.0 / x
    return _trusted(out)


def _log_uniform(rng: np.random.Generator, scale: float, size) -> np.ndarray:
    half = np.log(scale)
    return np.exp(rng.uniform(-half, half, size=size))


def random_reciprocal(n: int, scale: float = DEFAULT_SCALE, seed=None) -> ReciprocalMatrix:
    """Upper-triangle entries drawn log-uniformly on ``[1/scale, scale]``.

    ``seed`` may be an int, a ``SeedSequence`` or a ``Generator``.
    """
    if n < 2:
        raise OrderTooSmall(f"order must be at least 2, got {n}")
    scale = _positive(scale, "scale")
    rng = np.random.default_rng(seed)
    a = np.ones((n, n))
    iu = np.triu_indices(n, 1)
    if scale == 1.0:
        return _trusted(a)
    vals = _log_uniform(rng, scale, iu[0].size)
    a[iu] = vals
    a[(iu[1], iu[0])] = 1.0 / vals
    return _trusted(a)


def random_consistent(n: int, scale: float = DEFAULT_SCALE, seed=None) -> ReciprocalMatrix:
    if n < 2:
        raise OrderTooSmall(f"order must be at least 2, got {n}")
    scale = _positive(scale, "scale")
    rng = np.random.default_rng(seed)
    if scale == 1.0:
        return _trusted(np.ones((n, n)))
    return consistent_from_weights(_log_uniform(rng, scale, n))


def random_weights(n: int, scale: float = DEFAULT_SCALE, seed=None) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return _log_uniform(rng, _positive(scale, "scale"), n)
