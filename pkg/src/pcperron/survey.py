"""Monte Carlo inefficiency survey and seeded property sweeps.

Every random instance draws from its own stream,
``SeedSequence([seed, dim, index])``, so results do not depend on how
samples are scheduled across worker processes.
"""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from .char4 import characterize_4x4, subvector_guarantee_4x4
from .efficiency import efficiency_oracle, is_efficient, subvector_efficiency_profile
from .errors import InternalInconsistency, NotFound, UnknownProperty
from .extension import border_constant_column, extend_constant_row_sums
from .generators import (
    DEFAULT_SCALE,
    bozoki,
    random_consistent,
    random_reciprocal,
    random_weights,
    toeplitz_alt,
)
from .matrix import _as_array, is_consistent
from .spectral import geometric_mean_vector, perron, to_constant_row_sums
from .wellbehaved import Kind, classify

CSV_HEADER = ["dim", "samples", "inefficient", "sinks", "sources", "mean_lambda_gap"]


@dataclass(frozen=True)
class SurveyConfig:
    dims: tuple[int, ...]
    samples_per_dim: int
    scale: float = DEFAULT_SCALE
    seed: int = 0
    workers: int = 1

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        if not self.dims or min(self.dims) < 3:
            raise ValueError("survey dimensions must all be at least 3")
        if self.samples_per_dim < 1:
            raise ValueError("samples_per_dim must be at least 1")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")


@dataclass(frozen=True)
class SurveyRow:
    dim: int
    samples: int
    inefficient_count: int
    sink_count: int
    source_count: int
    mean_lambda_gap: float

    @property
    def inefficient_fraction(self) -> float:
        return self.inefficient_count / self.samples


def sample_rng(seed: int, dim: int, index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, dim, index]))


def _survey_sample(args) -> tuple[bool, bool, bool, float]:
    dim, index, seed, scale = args
    a = random_reciprocal(dim, scale, sample_rng(seed, dim, index))
    p = perron(a)
    rep = is_efficient(a, p.vector)
    inefficient = not rep.efficient
    return inefficient, inefficient and bool(rep.sinks), inefficient and bool(rep.sources), p.eigenvalue - dim


def _survey_chunk(tasks):
    return [_survey_sample(t) for t in tasks]


def run_survey(cfg: SurveyConfig) -> list[SurveyRow]:
    """Count Perron-vector inefficiency among random reciprocal matrices per dimension.

    ``sink_count``/``source_count`` count inefficient samples whose digraph
    has at least one sink/source vertex.
    """
    rows = []
    for dim in cfg.dims:
        tasks = [(dim, i, cfg.seed, cfg.scale) for i in range(cfg.samples_per_dim)]
        if cfg.workers == 1:
            results = _survey_chunk(tasks)
        else:
            size = math.ceil(len(tasks) / cfg.workers)
            chunks = [tasks[i : i + size] for i in range(0, len(tasks), size)]
            with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
                results = [r for part in pool.map(_survey_chunk, chunks) for r in part]
        rows.append(
            SurveyRow(
                dim=dim,
                samples=len(results),
                inefficient_count=sum(r[0] for r in results),
                sink_count=sum(r[1] for r in results),
                source_count=sum(r[2] for r in results),
                # fsum is correctly rounded, hence independent of summation order
                mean_lambda_gap=math.fsum(r[3] for r in results) / len(results),
            )
        )
    return rows


def survey_csv(rows: list[SurveyRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in rows:
        writer.writerow(
            [r.dim, r.samples, r.inefficient_count, r.sink_count, r.source_count, repr(r.mean_lambda_gap)]
        )
    return buf.getvalue()


def survey_dicts(rows: list[SurveyRow]) -> list[dict]:
    return [asdict(r) for r in rows]


# --- property sweeps --------------------------------------------------------


@dataclass
class SweepReport:
    name: str
    samples: int
    checked: int = 0
    passed: bool = True
    counterexample: dict | None = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


class _Fail(Exception):
    def __init__(self, detail, matrix, vector=None):
        super().__init__(detail)
        self.payload = {
            "detail": detail,
            "matrix": _as_array(matrix).tolist(),
            "vector": None if vector is None else np.asarray(vector).tolist(),
        }


def _require(cond, detail, matrix, vector=None):
    if not cond:
        raise _Fail(detail, matrix, vector)


def _log_uniform(rng, scale, size):
    h = math.log(scale)
    return np.exp(rng.uniform(-h, h, size=size))


def _prop_ll1(rng) -> bool:
    n = int(rng.integers(2, 8))
    a = random_reciprocal(n, DEFAULT_SCALE, rng)
    total = float(a.entries.sum())
    _require(total >= n * n * (1 - 1e-12), f"entry total {total} below n^2 = {n * n}", a)
    lam = perron(a).eigenvalue
    _require(lam >= n - 1e-9, f"Perron eigenvalue {lam} below n = {n}", a)
    return True


def _prop_lconswell(rng) -> bool:
    n = int(rng.integers(2, 8))
    a = random_consistent(n, DEFAULT_SCALE, rng)
    _require(classify(a).kind is not Kind.NOT_WELL_BEHAVED, "consistent matrix not well-behaved", a)
    return True


def _prop_t6(rng) -> bool:
    k = int(rng.integers(2, 7))
    base = random_consistent(k, DEFAULT_SCALE, rng).entries
    column = _log_uniform(rng, DEFAULT_SCALE, k)
    a = np.ones((k + 1, k + 1))
    a[:k, :k] = base
    a[:k, k] = column
    a[k, :k] = 1.0 / column
    w = perron(a).vector
    _require(is_efficient(a, w).efficient, "Perron vector inefficient although A(n) is consistent", a, w)
    return True


def _constant_row_sum_base(rng) -> np.ndarray:
    choice = int(rng.integers(0, 3))
    if choice == 0:
        k = int(rng.integers(3, 8))
        return bozoki(k, float(_log_uniform(rng, 4.0, 1)[0])).entries
    if choice == 1:
        k = int(rng.choice([3, 5, 7]))
        return toeplitz_alt(k, float(_log_uniform(rng, 4.0, 1)[0])).entries
    k = int(rng.integers(3, 8))
    return to_constant_row_sums(random_reciprocal(k, DEFAULT_SCALE, rng))[1].entries


def _prop_c4(rng) -> bool | None:
    t = _constant_row_sum_base(rng)
    if is_consistent(t):
        return None
    a_val = float(_log_uniform(rng, DEFAULT_SCALE, 1)[0])
    res = border_constant_column(t, a_val)
    a = res.matrix.entries
    w = perron(a).vector
    rep = is_efficient(a, w)
    n = a.shape[0]
    _require(not rep.efficient, "Perron vector efficient for a constant-column border", a, w)
    _require(n - 1 in rep.sinks, "last vertex is not a sink", a, w)
    return True


def _random_4x4(rng) -> np.ndarray:
    scale = 3.0 if rng.random() < 0.5 else 9.0
    return random_reciprocal(4, scale, rng).entries


def _prop_c27(rng) -> bool:
    a = _random_4x4(rng)
    try:
        wit = characterize_4x4(a)
    except InternalInconsistency as exc:
        raise _Fail(str(exc), a) from None
    if wit.inefficient:
        recon = (1.0 / wit.diagonal)[:, None] * wit.constant_row_sum_form.entries * wit.diagonal[None, :]
        _require(np.allclose(recon, a, rtol=1e-9, atol=0.0), "D^-1 B D does not reconstruct A", a)
    return True


def _prop_t5(rng) -> bool:
    a = _random_4x4(rng)
    try:
        subvector_guarantee_4x4(a)
    except NotFound as exc:
        raise _Fail(str(exc), a) from None
    return True


def _candidate_vector(a: np.ndarray, rng) -> np.ndarray:
    n = a.shape[0]
    choice = int(rng.integers(0, 4))
    if choice == 0:
        return perron(a).vector
    if choice == 1:
        return geometric_mean_vector(a)
    if choice == 2:
        return geometric_mean_vector(a) * _log_uniform(rng, 1.5, n)
    return random_weights(n, DEFAULT_SCALE, rng)


def _prop_thind(rng) -> bool | None:
    n = int(rng.integers(3, 8))
    a = random_reciprocal(n, DEFAULT_SCALE, rng).entries
    w = _candidate_vector(a, rng)
    if subvector_efficiency_profile(a, w).sum() < 2:
        return None
    _require(is_efficient(a, w).efficient, "two efficient subvectors but w inefficient", a, w)
    return True


def _prop_t2(rng) -> bool:
    k = int(rng.integers(3, 7))
    b = random_reciprocal(k, DEFAULT_SCALE, rng).entries
    if rng.random() < 0.5:
        # constant-row-sum forms and small perturbations of them are not well-behaved
        b = to_constant_row_sums(b)[1].entries
        if rng.random() < 0.5:
            iu = np.triu_indices(k, 1)
            b = b.copy()
            b[iu] *= _log_uniform(rng, 1.05, iu[0].size)
            b[(iu[1], iu[0])] = 1.0 / b[iu]
    a = extend_constant_row_sums(b).matrix.entries
    n = a.shape[0]
    w = perron(a).vector
    rep = is_efficient(a, w)
    kind = classify(b).kind
    if kind is Kind.NOT_WELL_BEHAVED:
        _require(not rep.efficient and n - 1 in rep.sinks, "not well-behaved base but no sink at n", a, w)
    if is_efficient(b, np.ones(k)).efficient and not rep.efficient:
        _require(kind is Kind.NOT_WELL_BEHAVED, "converse failed: base is well-behaved", a, w)
    return True


def _prop_ceff(rng) -> bool | None:
    n = int(rng.integers(4, 8))
    a = random_reciprocal(n, DEFAULT_SCALE, rng).entries
    w = perron(a).vector
    rep = is_efficient(a, w)
    if rep.efficient:
        return None
    if not subvector_efficiency_profile(a, w)[n - 1]:
        return None
    _require(n - 1 in rep.sinks, "w(n) efficient, w inefficient, but n is not a sink", a, w)
    return True


def _prop_oracle(rng) -> bool:
    n = int(rng.integers(3, 8))
    a = random_reciprocal(n, DEFAULT_SCALE, rng).entries
    w = _candidate_vector(a, rng)
    fast = is_efficient(a, w).efficient
    _require(fast == efficiency_oracle(a, w), "SCC verdict disagrees with transitive-closure oracle", a, w)
    return True


def _prop_geomean(rng) -> bool:
    n = int(rng.integers(3, 8))
    a = random_reciprocal(n, DEFAULT_SCALE, rng).entries
    w = geometric_mean_vector(a)
    _require(is_efficient(a, w).efficient, "geometric mean vector inefficient", a, w)
    return True


PROPERTIES: dict[str, Callable] = {
    "ll1": _prop_ll1,
    "lconswell": _prop_lconswell,
    "t2": _prop_t2,
    "t5": _prop_t5,
    "t6": _prop_t6,
    "c4": _prop_c4,
    "c27": _prop_c27,
    "ceff": _prop_ceff,
    "thind": _prop_thind,
    "oracle": _prop_oracle,
    "geomean": _prop_geomean,
}

# distinct stream namespace per property so sweeps never share instances
_PROPERTY_TAGS = {name: i + 1000 for i, name in enumerate(PROPERTIES)}


def run_theorem_sweep(name: str, samples: int, seed: int = 0) -> SweepReport:
    """Run a registered property over ``samples`` seeded random instances.

    Stops at the first failure and attaches the offending matrix (and
    vector, where relevant) as ``counterexample``. ``checked`` counts
    instances where the property's hypothesis held.
    """
    try:
        prop = PROPERTIES[name]
    except KeyError:
        raise UnknownProperty(f"unknown property {name!r}; known: {sorted(PROPERTIES)}") from None
    report = SweepReport(name=name, samples=samples)
    tag = _PROPERTY_TAGS[name]
    for i in range(samples):
        rng = sample_rng(seed, tag, i)
        try:
            outcome = prop(rng)
        except _Fail as fail:
            report.passed = False
            report.counterexample = dict(fail.payload, index=i)
            return report
        if outcome:
            report.checked += 1
    return report
