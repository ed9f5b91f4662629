"""Acceptance criteria 1-10; a PASS/FAIL line per criterion is printed at the end of the run."""

import io
import json
import subprocess
import sys
import time

import numpy as np
import pytest

from printed_fixtures import (
    A4,
    BLANQ_A,
    BLANQ_B,
    BLANQ_W,
    EX1_A1,
    EX1_A2,
    EX1_A3,
    EX1_A4,
    EX4_A,
    EXSUBVIN_A,
    EXSUBVIN_B,
    EXSUBVIN_C,
    EXSUBVIN_S,
    EXSUBVIN_V,
    EXX0_LAST_ROW,
)
from pcperron.char4 import characterize_4x4
from pcperron.cli import EXIT_INEFFICIENT, main
from pcperron.efficiency import is_efficient, subvector_efficiency_profile
from pcperron.extension import extend_constant_row_sums, extend_efficient, extend_inefficient
from pcperron.fileio import matrix_to_csv
from pcperron.matrix import FIXTURE_TOL, principal_submatrix, validate
from pcperron.spectral import perron
from pcperron.survey import SurveyConfig, run_survey, run_theorem_sweep
from pcperron.wellbehaved import classify

criterion = pytest.mark.criterion


@criterion(1, "constant-row-sum extension of the 3x3 fixture")
def test_ac1_constant_row_sum_extension(tmp_path):
    start = time.perf_counter()
    res = extend_constant_row_sums(A4)
    assert abs(res.root_x - 0.39137) <= 1e-4
    assert np.all(np.abs(res.matrix.entries[3, :3] - EXX0_LAST_ROW) <= 1e-3)
    path = tmp_path / "ext.csv"
    path.write_text(matrix_to_csv(res.matrix))
    out = io.StringIO()
    code = main(["analyze", str(path), "--json"], out)
    report = json.loads(out.getvalue())
    elapsed = time.perf_counter() - start
    assert code == EXIT_INEFFICIENT
    assert report["efficient"] is False and report["sinks"] == [4]
    assert elapsed < 1.0


@criterion(2, "efficient extension via column scaling")
def test_ac2_efficient_extension():
    # D = diag(1/5, 1, 9/2)^-1 is the second column of the fixture
    res = extend_efficient(A4, column=1)
    assert np.allclose(res.target_perron[:3], [1 / 5, 1, 9 / 2], rtol=1e-15)
    assert abs(res.root_x - 0.00864) <= 1e-4
    m = res.matrix.entries
    assert abs(m[0, 3] - 0.001728) <= 1e-2 * 0.001728
    assert abs(m[3, 0] - 578.7) <= 1e-2 * 578.7
    assert is_efficient(res.matrix, perron(res.matrix).vector).efficient


@criterion(3, "inefficient-extension pipeline through a 4x4 intermediate")
def test_ac3_inefficient_pipeline():
    s = validate(EXSUBVIN_S, FIXTURE_TOL)
    v = perron(s).vector
    assert np.all(np.abs(v - EXSUBVIN_V) <= 1e-3)
    c = v[None, :] * s.entries / v[:, None]
    assert np.all(np.abs(c - EXSUBVIN_C) <= 1e-3)
    res = extend_inefficient(EXSUBVIN_B, 5, a=1.0, c=1.0, intermediate=s)
    assert np.all(np.abs(res.matrix.entries - EXSUBVIN_A) <= 1e-3)
    rep = is_efficient(res.matrix, perron(res.matrix).vector)
    assert not rep.efficient and [x + 1 for x in rep.sinks] == [5]


@criterion(4, "4x4 dominating-row witness")
def test_ac4_char4_fixture():
    a = validate(BLANQ_A, FIXTURE_TOL)
    assert np.all(np.abs(perron(a).vector - BLANQ_W) <= 1e-3)
    wit = characterize_4x4(a)
    assert wit.inefficient
    assert wit.to_dict()["dominating_row"] == 3
    assert np.all(np.abs(wit.constant_row_sum_form.entries - BLANQ_B) <= 1e-3)


@criterion(5, "well-behaved classification of four 3x3 examples")
def test_ac5_classification():
    kinds = [classify(a).kind.value for a in (EX1_A1, EX1_A2, EX1_A3, EX1_A4)]
    assert kinds == ["TypeI", "TypeII", "NotWellBehaved", "NotWellBehaved"]


@criterion(6, "6x6 inefficient Perron vector with no sink or source")
def test_ac6_no_sink_no_source():
    a = validate(EX4_A, FIXTURE_TOL)
    w = perron(a).vector
    assert np.all(np.abs(w - 1.0) <= 5e-3)
    rep = is_efficient(a, w)
    assert not rep.efficient
    assert rep.sinks == [] and rep.sources == []
    for i in range(6):
        sub = principal_submatrix(a, [i])
        assert classify(sub).well_behaved
        assert not is_efficient(sub, np.ones(5)).efficient
    assert not subvector_efficiency_profile(a, np.ones(6)).any()


@criterion(7, "randomized property sweeps")
@pytest.mark.parametrize(
    "name, samples",
    [("t6", 1000), ("c4", 1000), ("c27", 10_000), ("t5", 10_000), ("thind", 1000), ("ll1", 10_000),
     ("lconswell", 10_000)],
)
def test_ac7_sweeps(name, samples):
    start = time.perf_counter()
    rep = run_theorem_sweep(name, samples, seed=2024)
    elapsed = time.perf_counter() - start
    assert rep.passed, rep.counterexample
    assert rep.checked > 0
    assert elapsed < 30.0, f"{name} took {elapsed:.1f} s"


@criterion(8, "SCC verdict matches transitive-closure oracle")
def test_ac8_oracle_equivalence():
    rep = run_theorem_sweep("oracle", 10_000, seed=8)
    assert rep.passed, rep.counterexample
    assert rep.checked == 10_000


@criterion(9, "survey: order 3 always efficient, inefficiency falls from order 4 to 7")
def test_ac9_survey():
    (r3,) = run_survey(SurveyConfig(dims=(3,), samples_per_dim=1000, scale=9.0, seed=9))
    assert r3.inefficient_count == 0
    r4, r7 = run_survey(SurveyConfig(dims=(4, 7), samples_per_dim=10_000, scale=9.0, seed=9))
    assert r4.inefficient_fraction > r7.inefficient_fraction


def _cli(*args, cwd):
    proc = subprocess.run([sys.executable, "-m", "pcperron", *args], capture_output=True, cwd=cwd)
    return proc.returncode, proc.stdout


@criterion(10, "CLI output byte-identical across runs and worker counts")
def test_ac10_determinism(tmp_path):
    gen = ["generate", "--family", "random", "--order", "6", "--seed", "77"]
    first, second = _cli(*gen, cwd=tmp_path), _cli(*gen, cwd=tmp_path)
    assert first == second and first[0] == 0

    (tmp_path / "b.csv").write_text(matrix_to_csv(A4))
    ext = ["extend", "b.csv", "--mode", "inefficient", "--target-order", "6", "--seed", "5", "--json"]
    assert _cli(*ext, cwd=tmp_path) == _cli(*ext, cwd=tmp_path)

    survey = ["survey", "--dims", "4", "5", "--samples", "400", "--seed", "11"]
    outputs = {_cli(*survey, "--workers", str(k), cwd=tmp_path) for k in (1, 2, 4)}
    outputs.add(_cli(*survey, "--workers", "1", cwd=tmp_path))
    assert len(outputs) == 1
    code, text = outputs.pop()
    assert code == 0 and text.startswith(b"dim,samples,")
