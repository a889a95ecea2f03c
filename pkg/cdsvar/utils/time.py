# -*- coding: utf-8 -*-

"""
cdsvar.utils.time
~~~~~~~~~~~~~~~~~

This module contains the date utilities shared by the filters, the study windows and the
report writers.

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

# Package imports
import datetime

import numpy as np
import pandas as pd

# Local imports

# # Exception Handling
from cdsvar.models.exceptions import InvalidOptionError


def to_date(value) -> datetime.date:
    """A utility function that converts an ISO-8601 string, a date, a pandas Timestamp or a
    numpy datetime64 to a calendar date

    :param value: The date to convert
    :type value: str | datetime.date | pandas.Timestamp | numpy.datetime64

    '''
    :raise InvalidOptionError: Not a date
    '''

    Usage::
        >>> from cdsvar.utils.time import to_date
        >>> to_date("2004-01-01")
        datetime.date(2004, 1, 1)
    """

    if value is None:
        raise InvalidOptionError(param="date", value=value, options=["an ISO-8601 date"])

    try:
        return pd.Timestamp(value).date()
    except (TypeError, ValueError):
        raise InvalidOptionError(param="date", value=value, options=["an ISO-8601 date"])


def day_after(value) -> datetime.date:
    """The next calendar day; turns an inclusive last date into a half-open window end"""

    return to_date(value) + datetime.timedelta(days=1)


def to_day(value) -> np.datetime64:
    """Day-resolution numpy datetime, the date unit of every series"""

    return np.datetime64(to_date(value), "D")


def iso(value) -> str:
    """``YYYY-MM-DD`` text of a date, None stays None"""

    return None if value is None else to_date(value).isoformat()
