import numpy as np
import pytest

from pcperron.errors import UnknownProperty
from pcperron.survey import (
    CSV_HEADER,
    PROPERTIES,
    SurveyConfig,
    run_survey,
    run_theorem_sweep,
    sample_rng,
    survey_csv,
    survey_dicts,
)


def test_config_validation():
    with pytest.raises(ValueError):
        SurveyConfig(dims=(2,), samples_per_dim=10)
    with pytest.raises(ValueError):
        SurveyConfig(dims=(3,), samples_per_dim=0)
    with pytest.raises(ValueError):
        SurveyConfig(dims=(3,), samples_per_dim=1, workers=0)


def test_sample_streams_independent_of_order():
    a = sample_rng(1, 4, 7).random(3)
    sample_rng(1, 4, 6).random(3)
    assert np.array_equal(a, sample_rng(1, 4, 7).random(3))
    assert not np.array_equal(a, sample_rng(1, 5, 7).random(3))


def test_small_survey_shape():
    rows = run_survey(SurveyConfig(dims=(3, 4), samples_per_dim=200, seed=5))
    assert [r.dim for r in rows] == [3, 4]
    assert rows[0].inefficient_count == 0
    for r in rows:
        assert r.samples == 200
        assert r.sink_count <= r.inefficient_count and r.source_count <= r.inefficient_count
        assert r.mean_lambda_gap > 0
    text = survey_csv(rows)
    assert text.splitlines()[0] == ",".join(CSV_HEADER)
    assert len(text.splitlines()) == 3
    assert survey_dicts(rows)[1]["dim"] == 4


def test_workers_do_not_change_results():
    cfg = dict(dims=(4, 5), samples_per_dim=150, seed=9)
    one = survey_csv(run_survey(SurveyConfig(**cfg, workers=1)))
    three = survey_csv(run_survey(SurveyConfig(**cfg, workers=3)))
    assert one == three


def test_unknown_property():
    with pytest.raises(UnknownProperty):
        run_theorem_sweep("nope", 1)


@pytest.mark.parametrize("name", sorted(PROPERTIES))
def test_short_sweeps_pass(name):
    rep = run_theorem_sweep(name, 200, seed=1)
    assert rep.passed, rep.counterexample
    assert rep.samples == 200 and rep.checked <= 200
    assert rep.to_dict()["name"] == name


def test_sweep_deterministic():
    assert run_theorem_sweep("oracle", 100, 4).to_dict() == run_theorem_sweep("oracle", 100, 4).to_dict()
