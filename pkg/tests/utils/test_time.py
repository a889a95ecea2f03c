# -*- coding: utf-8 -*-

"""
tests.utils.test_time
~~~~~~~~~~~~~~~~~~~~~

For testing the functions under cdsvar/utils/time.py

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

import datetime

import numpy as np
import pandas as pd
import pytest

from cdsvar.models.exceptions import InvalidOptionError
from cdsvar.utils.time import day_after, iso, to_date, to_day


@pytest.mark.parametrize(
    "value",
    ["2004-01-01", datetime.date(2004, 1, 1), pd.Timestamp("2004-01-01"),
     np.datetime64("2004-01-01")],
)
def test_to_date(value):

    assert to_date(value) == datetime.date(2004, 1, 1)


@pytest.mark.parametrize("value", [None, "first of january", "2004-13-45"])
def test_to_date_rejects(value):

    with pytest.raises(InvalidOptionError):
        to_date(value)


def test_day_after_and_iso():

    assert day_after("2007-02-08") == datetime.date(2007, 2, 9)
    assert day_after("2004-02-28") == datetime.date(2004, 2, 29)
    assert to_day("2004-01-01") == np.datetime64("2004-01-01", "D")
    assert iso(np.datetime64("2008-02-21")) == "2008-02-21"
    assert iso(None) is None
