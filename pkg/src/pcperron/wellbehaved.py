"""The extension function of a reciprocal matrix and the well-behaved classes.

For ``B`` of order ``k`` with row sums ``r_i`` and largest row sum
``r_max``, the extension function is

    f(x) = sum_i 1 / (r_max - r_i + x) + 1 - r_max - x,   x > 0.

It is strictly decreasing with range the whole real line, so it has a
single positive root. That root is the border parameter of the unique
constant-row-sum one-row extension of ``B``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import NonPositiveArgument
from .matrix import _as_array, row_sums

ROOT_REL_WIDTH = 1e-14


class Kind(str, Enum):
    TYPE_I = "TypeI"
    TYPE_II = "TypeII"
    NOT_WELL_BEHAVED = "NotWellBehaved"


@dataclass(frozen=True)
class WellBehavedClass:
    kind: Kind
    gap: float
    boundary_value: float | None

    @property
    def well_behaved(self) -> bool:
        return self.kind is not Kind.NOT_WELL_BEHAVED

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "gap": self.gap, "boundary_value": self.boundary_value}


def f_from_row_sums(sums, x: float) -> float:
    if not x > 0:
        raise NonPositiveArgument(f"extension function is defined for x > 0, got {x!r}")
    s = np.asarray(sums, dtype=float)
    r_max = s.max()
    return float(np.sum(1.0 / (r_max - s + x)) + 1.0 - r_max - x)


def f_eval(b, x: float) -> float:
    return f_from_row_sums(row_sums(b).sums, x)


def root_from_row_sums(sums) -> float:
    """Unique positive root of the extension function for the given row sums.

    Brackets by halving/doubling from 1, then bisects to relative width
    ``ROOT_REL_WIDTH``.
    """
    s = np.asarray(sums, dtype=float)
    if f_from_row_sums(s, 1.0) == 0.0:
        return 1.0
    lo = hi = 1.0
    while f_from_row_sums(s, lo) <= 0:
        lo /= 2.0
    while f_from_row_sums(s, hi) >= 0:
        hi *= 2.0
    while hi - lo > ROOT_REL_WIDTH * hi:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = f_from_row_sums(s, mid)
        if fm > 0:
            lo = mid
        elif fm < 0:
            hi = mid
        else:
            return mid
    return 0.5 * (lo + hi)


def solve_f(b) -> float:
    return root_from_row_sums(row_sums(b).sums)


def closed_form_root(a1: float, k: int) -> float:
    """Root of ``k / x + 1 - a1 - x`` (the constant-row-sum case)."""
    if a1 < 0 or k < 1:
        raise NonPositiveArgument("closed form needs a1 >= 0 and k >= 1")
    return (1.0 - a1 + math.sqrt((1.0 - a1) ** 2 + 4.0 * k)) / 2.0


def classify_row_sums(sums) -> WellBehavedClass:
    s = np.asarray(sums, dtype=float)
    r_max, r_min = float(s.max()), float(s.min())
    gap = r_max - r_min
    if gap >= 1.0:
        return WellBehavedClass(Kind.TYPE_I, gap, None)
    boundary = float(np.sum(1.0 / (1.0 + r_min - s)) - r_min)
    kind = Kind.TYPE_II if boundary >= 0 else Kind.NOT_WELL_BEHAVED
    return WellBehavedClass(kind, gap, boundary)


def classify(b) -> WellBehavedClass:
    return classify_row_sums(row_sums(_as_array(b)).sums)
