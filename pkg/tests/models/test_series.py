# -*- coding: utf-8 -*-

"""
tests.models.test_series
~~~~~~~~~~~~~~~~~~~~~~~~

For testing the classes under cdsvar/models/series.py

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

import datetime

import numpy as np
import pytest

from cdsvar.models.exceptions import (
    InvalidOptionError,
    InvalidSeriesError,
    NonPositiveCap,
    NonPositivePrice,
)
from cdsvar.models.series import AlignedPanel, EntityRecord, FieldKind, ObservationSeries

from tests.helper.builders import panel, series


def test_observation_series_from_points():

    prices = ObservationSeries.from_points(
        "FTE", "SharePrice", [("2004-01-02", 100.0), ("2004-01-05", 105.0)]
    )

    assert len(prices) == 2
    assert prices.field_kind == FieldKind.SharePrice
    assert prices.points()[1] == (datetime.date(2004, 1, 5), 105.0)
    assert prices.to_pandas().index[0].date() == datetime.date(2004, 1, 2)


def test_observation_series_is_frozen():

    prices = series([100.0, 101.0, 102.0])

    with pytest.raises(ValueError):
        prices.values[0] = 1.0


def test_observation_series_rejects_unordered_dates():

    with pytest.raises(InvalidSeriesError):
        ObservationSeries.from_points(
            "FTE", "CdsBid", [("2004-01-05", 23.0), ("2004-01-02", 24.0)]
        )

    with pytest.raises(InvalidSeriesError):
        ObservationSeries.from_points(
            "FTE", "CdsBid", [("2004-01-05", 23.0), ("2004-01-05", 24.0)]
        )


def test_observation_series_rejects_non_positive_prices():

    with pytest.raises(NonPositivePrice):
        series([100.0, 0.0, 101.0])

    # spreads may be zero or negative
    assert series([0.5, -0.2], field_kind=FieldKind.BondYield).values[1] == -0.2


def test_field_kind_variables():

    assert FieldKind.ShareReturn.variable() == "RS"
    assert FieldKind.BondSpreadChange.variable() == "DBOND"
    assert FieldKind.CdsSpreadChange.variable() == "DCDS"
    assert FieldKind.SharePrice.variable() is None
    assert FieldKind.CdsSpread.differenced() == FieldKind.CdsSpreadChange
    assert FieldKind.SwapRate5y.differenced() == FieldKind.Difference
    assert len(FieldKind.raw_kinds()) == 6


def test_entity_record():

    record = EntityRecord("FTE", "France Telecom", "Telecoms", 5.5e10, "2001-01-02",
                          "2008-02-21")

    assert record.window_start == datetime.date(2001, 1, 2)

    with pytest.raises(NonPositiveCap):
        EntityRecord("FTE", "France Telecom", "Telecoms", 0.0, "2001-01-02", "2008-02-21")

    with pytest.raises(InvalidOptionError):
        EntityRecord("FTE", "France Telecom", "Telecoms", 1.0, "2008-02-21", "2001-01-02")


def test_aligned_panel_select_and_window():

    data = panel(np.arange(20.0).reshape(10, 2), columns=("RS", "DCDS"))

    swapped = data.select(["DCDS", "RS"])
    assert swapped.columns == ("DCDS", "RS")
    assert np.array_equal(swapped.column("RS"), data.column("RS"))

    # half-open window
    windowed = data.window(data.dates[2], data.dates[5])
    assert windowed.n_obs == 3
    assert windowed.dates[0] == data.dates[2]

    with pytest.raises(InvalidOptionError):
        data.column("DBOND")


def test_aligned_panel_rejects_missing_values():

    values = np.ones((4, 2))
    values[2, 1] = np.nan

    with pytest.raises(InvalidSeriesError):
        panel(values)

    with pytest.raises(InvalidSeriesError):
        AlignedPanel(entity_id="E", dates=["2004-01-05"], columns=("A", "A"),
                     values=[[1.0, 2.0]])
