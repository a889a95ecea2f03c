# -*- coding: utf-8 -*-

"""
tests.models.test_config
~~~~~~~~~~~~~~~~~~~~~~~~

For testing the classes under cdsvar/models/config.py

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

import os

import pytest

from cdsvar.models.config import StudyConfig
from cdsvar.models.exceptions import InvalidKwargError, InvalidOptionError, ParseError

from tests.helper.builders import write_csv, write_json


def test_from_json_resolves_relative_paths(tmp_path):

    path = write_json(tmp_path / "study.json", {
        "observations": "observations.csv",
        "entities": "data/entities.csv",
        "output": "out",
        "lag_order": 3,
    })

    config = StudyConfig.from_json(path)

    assert config.observations == os.path.join(str(tmp_path), "observations.csv")
    assert config.entities == os.path.join(str(tmp_path), "data", "entities.csv")
    assert config.output == os.path.join(str(tmp_path), "out")
    assert config.lag_order == 3
    assert config.models["VAR1"] == ["RS", "DBOND", "DCDS"]
    assert config.breakpoints == ["2004-01-01"]
    assert config.period_ends == {"VAR1": "2007-02-08", "VAR2": "2008-02-21"}
    assert config.horizon == 15
    assert config.significance == 0.05


def test_from_json_overrides(tmp_path):

    path = write_json(tmp_path / "study.json", {
        "observations": "observations.csv",
        "entities": "entities.csv",
    })

    config = StudyConfig.from_json(path, lag_order=2, horizon=None, plots=False,
                                   breakpoints=["2005-01-01", "2004-06-01"])

    assert config.lag_order == 2
    assert config.horizon == 15
    assert config.plots is False
    assert config.breakpoints == ["2004-06-01", "2005-01-01"]
    # no output anywhere
    assert config.output == "report"


def test_with_overrides():

    config = StudyConfig(observations="o.csv", entities="e.csv")

    assert config.with_overrides(significance=0.01, seed=None).significance == 0.01
    assert config.with_overrides(seed=None).seed == config.seed

    with pytest.raises(InvalidKwargError):
        config.with_overrides(lag=3)


@pytest.mark.parametrize(
    "document",
    [
        {"lag_order": 0},
        {"horizon": 0},
        {"significance": 1.5},
        {"seed": -3},
        {"workers": 0},
        {"models": {"VAR1": ["RS"]}},
        {"models": {"VAR1": ["RS", "PRICE"]}},
        {"breakpoints": ["2004-01-01", "2004-01-01"]},
    ],
)
def test_invalid_documents(tmp_path, document):

    path = write_json(tmp_path / "study.json", {
        "observations": "observations.csv",
        "entities": "entities.csv",
        **document,
    })

    with pytest.raises(InvalidOptionError):
        StudyConfig.from_json(path)


def test_unknown_key(tmp_path):

    path = write_json(tmp_path / "study.json", {
        "observations": "observations.csv",
        "entities": "entities.csv",
        "lags": 5,
    })

    with pytest.raises(InvalidKwargError):
        StudyConfig.from_json(path)


def test_missing_inputs(tmp_path):

    path = write_json(tmp_path / "study.json", {"observations": "observations.csv"})

    with pytest.raises(InvalidOptionError):
        StudyConfig.from_json(path)


def test_unparsable_document(tmp_path):

    path = write_csv(tmp_path / "study.json", '{"observations": ')

    with pytest.raises(ParseError):
        StudyConfig.from_json(path)

    path = write_json(tmp_path / "list.json", ["observations.csv"])

    with pytest.raises(ParseError):
        StudyConfig.from_json(path)
