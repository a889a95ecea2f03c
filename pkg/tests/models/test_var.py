# -*- coding: utf-8 -*-

"""
tests.models.test_var
~~~~~~~~~~~~~~~~~~~~~

For testing the classes under cdsvar/models/var.py

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

import datetime

import numpy as np
import pytest

from cdsvar.models.exceptions import InvalidOptionError
from cdsvar.models.var import EquationStats, VarSpec

from tests.helper.builders import fake_fit


def test_regressor_names():

    spec = VarSpec(("RS", "DBOND", "DCDS"), lag_order=2)

    assert spec.regressor_names() == [
        "Const", "RS(-1)", "RS(-2)", "DBOND(-1)", "DBOND(-2)", "DCDS(-1)", "DCDS(-2)",
    ]
    assert spec.n_regressors == 7
    assert spec.lag_columns("DBOND") == [3, 4]


def test_regressor_names_without_intercept():

    spec = VarSpec(("RS", "DCDS"), lag_order=1, include_intercept=False)

    assert spec.regressor_names() == ["RS(-1)", "DCDS(-1)"]
    assert spec.lag_columns("RS") == [0]


def test_required_rows():

    assert VarSpec(("RS", "DBOND", "DCDS"), 5).required_rows == 3 * 5 + 5 + 10
    assert VarSpec(("RS", "DCDS"), 1, min_extra_rows=0).required_rows == 3


def test_invalid_specs():

    with pytest.raises(InvalidOptionError):
        VarSpec(("RS", "RS"), 5)

    with pytest.raises(InvalidOptionError):
        VarSpec(("RS", "DCDS"), 0)

    with pytest.raises(InvalidOptionError):
        VarSpec(("RS", "DCDS"), 5, sample_window=("2005-01-01", "2004-01-01"))

    with pytest.raises(InvalidOptionError):
        VarSpec(("RS", "DCDS"), 5).lag_columns("DBOND")


def test_with_window():

    spec = VarSpec(("RS", "DCDS"), 3, min_extra_rows=4)
    windowed = spec.with_window("2004-01-01", None)

    assert windowed.sample_window == (datetime.date(2004, 1, 1), None)
    assert windowed.min_extra_rows == 4
    assert windowed.shape() == spec.shape()
    assert windowed.to_dict()["sample_window"] == ["2004-01-01", None]


def test_equation_stats_names():

    names = EquationStats.names()

    assert len(names) == 8
    assert "ssr" not in names


def test_lag_matrices():

    spec = VarSpec(("X1", "X2"), lag_order=2)
    # rows are equations; columns Const, X1(-1), X1(-2), X2(-1), X2(-2)
    coefficients = np.array([
        [0.1, 0.5, 0.2, 0.3, 0.0],
        [0.0, -0.4, 0.0, 0.6, 0.1],
    ])
    fit = fake_fit(spec, coefficients=coefficients)

    lags = fit.lag_matrices()

    assert lags.shape == (2, 2, 2)
    assert np.array_equal(lags[0], [[0.5, 0.3], [-0.4, 0.6]])
    assert np.array_equal(lags[1], [[0.2, 0.0], [0.0, 0.1]])
    assert np.array_equal(fit.intercept, [0.1, 0.0])
    assert fit.n_eff == 100
    assert fit.df_resid == 95
