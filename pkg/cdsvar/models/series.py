# -*- coding: utf-8 -*-

"""
cdsvar.models.series
~~~~~~~~~~~~~~~~~~~~

This module contains the class representations of market observations: raw and derived
observation series, entity metadata, and the aligned T x k panel the VAR systems are
estimated on.

All three types are immutable once constructed; the numpy buffers they hold are flagged
read-only.

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

# Package imports
import datetime
from dataclasses import dataclass
from enum import Enum

import numpy as np
import pandas as pd

# Local imports

# # Exception Handling
from cdsvar.models.exceptions import (
    InvalidOptionError,
    InvalidSeriesError,
    NonPositiveCap,
    NonPositivePrice,
)

# Column names of the market variables, in Cholesky order
MARKET_COLUMNS = ("RS", "DBOND", "DCDS")


class FieldKind(str, Enum):
    """Kind of a series; the first six are ingested, the others are derived"""

    SharePrice = "SharePrice"
    CdsBid = "CdsBid"
    CdsAsk = "CdsAsk"
    BondYield = "BondYield"
    SwapRate5y = "SwapRate5y"
    MarketCap = "MarketCap"

    LogPrice = "LogPrice"
    ShareReturn = "ShareReturn"
    CdsSpread = "CdsSpread"
    BondSpread = "BondSpread"
    CdsSpreadChange = "CdsSpreadChange"
    BondSpreadChange = "BondSpreadChange"
    Difference = "Difference"

    @classmethod
    def raw_kinds(cls) -> list:
        """Kinds accepted in the observations CSV"""

        return [
            cls.SharePrice,
            cls.CdsBid,
            cls.CdsAsk,
            cls.BondYield,
            cls.SwapRate5y,
            cls.MarketCap,
        ]

    def variable(self) -> str:
        """Panel column name of a stationary analysis variable, None for other kinds"""

        return {
            FieldKind.ShareReturn: "RS",
            FieldKind.BondSpreadChange: "DBOND",
            FieldKind.CdsSpreadChange: "DCDS",
        }.get(self)

    def differenced(self) -> "FieldKind":
        """Kind of the first difference of a series of this kind"""

        return {
            FieldKind.CdsSpread: FieldKind.CdsSpreadChange,
            FieldKind.BondSpread: FieldKind.BondSpreadChange,
        }.get(self, FieldKind.Difference)


def _to_dates(dates) -> np.ndarray:
    """Converts any sequence of dates or ISO strings to a datetime64[D] array"""

    return np.asarray(pd.to_datetime(pd.Index(dates)).values, dtype="datetime64[D]")


def _freeze(array: np.ndarray) -> np.ndarray:
    """Returns a read-only copy"""

    frozen = np.array(array, copy=True)
    frozen.setflags(write=False)
    return frozen


@dataclass(frozen=True)
class ObservationSeries:
    """A date-indexed series tagged with its entity and kind

    :param entity_id: Opaque entity identifier
    :type entity_id: str

    :param field_kind: What the values measure
    :type field_kind: FieldKind

    :param dates: Strictly increasing calendar dates
    :type dates: numpy.ndarray

    :param values: One real value per date
    :type values: numpy.ndarray

    '''
    :raise InvalidSeriesError: Unordered or duplicated dates, or mismatched lengths
    :raise NonPositivePrice: A share price <= 0
    '''

    Usage::
        >>> from cdsvar.models.series import ObservationSeries, FieldKind
        >>> prices = ObservationSeries.from_points(
                "FTE", FieldKind.SharePrice, [("2004-01-02", 100.0), ("2004-01-05", 105.0)]
            )
        >>> len(prices)
        2
    """

    entity_id: str
    field_kind: FieldKind
    dates: np.ndarray
    values: np.ndarray

    def __post_init__(self) -> None:
        """Validates and freezes the buffers"""

        dates = _to_dates(self.dates)
        values = np.asarray(self.values, dtype=float).reshape(-1)

        if dates.shape[0] != values.shape[0]:
            raise InvalidSeriesError(
                self.entity_id,
                f"{dates.shape[0]} dates for {values.shape[0]} values",
            )

        if dates.shape[0] > 1 and not np.all(dates[1:] > dates[:-1]):
            raise InvalidSeriesError(
                self.entity_id,
                f"{self.field_kind.value} dates are not strictly increasing",
            )

        if self.field_kind == FieldKind.SharePrice:
            bad = np.flatnonzero(~(values > 0))
            if bad.size:
                raise NonPositivePrice(date=dates[bad[0]], value=values[bad[0]])

        object.__setattr__(self, "field_kind", FieldKind(self.field_kind))
        object.__setattr__(self, "dates", _freeze(dates))
        object.__setattr__(self, "values", _freeze(values))

    @classmethod
    def from_points(cls, entity_id: str, field_kind, points: list) -> "ObservationSeries":
        """Builds a series from a list of ``(date, value)`` pairs"""

        dates = [point[0] for point in points]
        values = [point[1] for point in points]
        return cls(entity_id=entity_id, field_kind=FieldKind(field_kind), dates=dates,
                   values=values)

    @classmethod
    def from_pandas(cls, entity_id: str, field_kind, series: pd.Series) -> "ObservationSeries":
        """Builds a series from a date-indexed pandas Series"""

        return cls(entity_id=entity_id, field_kind=FieldKind(field_kind),
                   dates=series.index, values=series.to_numpy(dtype=float))

    def __len__(self) -> int:
        return int(self.values.shape[0])

    def points(self) -> list:
        """Returns the ``(datetime.date, float)`` pairs"""

        return [
            (date.astype(datetime.date), float(value))
            for date, value in zip(self.dates, self.values)
        ]

    def to_pandas(self) -> pd.Series:
        """Returns the series as a pandas Series over a DatetimeIndex"""

        return pd.Series(
            np.array(self.values),
            index=pd.DatetimeIndex(self.dates.astype("datetime64[ns]")),
            name=self.field_kind.value,
        )

    def __repr__(self) -> str:
        return (
            f"ObservationSeries(entity_id={self.entity_id!r}, "
            f"field_kind={self.field_kind.value}, n={len(self)})"
        )


@dataclass(frozen=True)
class EntityRecord:
    """Metadata of a reference entity

    :param entity_id: Opaque entity identifier
    :param name: Display name
    :param sector: Sector of activity
    :param market_cap: Market capitalization at the reference date, > 0
    :param window_start: First date of the observation window
    :param window_end: Last date of the observation window

    '''
    :raise NonPositiveCap: market_cap <= 0
    :raise InvalidOptionError: window_start >= window_end
    '''
    """

    entity_id: str
    name: str
    sector: str
    market_cap: float
    window_start: datetime.date
    window_end: datetime.date

    def __post_init__(self) -> None:
        """Validates the record"""

        if not self.market_cap > 0:
            raise NonPositiveCap(self.market_cap)

        start = pd.Timestamp(self.window_start).date()
        end = pd.Timestamp(self.window_end).date()

        if not start < end:
            raise InvalidOptionError(
                param="observation_window",
                value=f"{start} - {end}",
                options=["window_start < window_end"],
            )

        object.__setattr__(self, "market_cap", float(self.market_cap))
        object.__setattr__(self, "window_start", start)
        object.__setattr__(self, "window_end", end)


@dataclass(frozen=True)
class AlignedPanel:
    """T x k matrix of variables on a common date grid for one entity

    Panels built from market data carry two or three of the columns RS, DBOND, DCDS in
    that order; simulated panels may carry any column names.

    :param entity_id: The entity
    :type entity_id: str

    :param dates: Strictly increasing dates, one per row
    :type dates: numpy.ndarray

    :param columns: Column names
    :type columns: tuple

    :param values: T x k matrix with no missing value
    :type values: numpy.ndarray

    '''
    :raise InvalidSeriesError: Shape mismatch, missing values, unordered dates
    '''
    """

    entity_id: str
    dates: np.ndarray
    columns: tuple
    values: np.ndarray

    def __post_init__(self) -> None:
        """Validates and freezes the buffers"""

        dates = _to_dates(self.dates)
        values = np.asarray(self.values, dtype=float)
        columns = tuple(str(column) for column in self.columns)

        if values.ndim == 1:
            values = values.reshape(-1, 1)

        if values.shape != (dates.shape[0], len(columns)):
            raise InvalidSeriesError(
                self.entity_id,
                f"values shaped {values.shape} for {dates.shape[0]} dates "
                f"and {len(columns)} columns",
            )

        if len(columns) == 0 or len(set(columns)) != len(columns):
            raise InvalidSeriesError(self.entity_id, f"columns {columns} are not distinct")

        if not np.all(np.isfinite(values)):
            raise InvalidSeriesError(self.entity_id, "panel contains missing values")

        if dates.shape[0] > 1 and not np.all(dates[1:] > dates[:-1]):
            raise InvalidSeriesError(self.entity_id, "panel dates are not strictly increasing")

        object.__setattr__(self, "dates", _freeze(dates))
        object.__setattr__(self, "columns", columns)
        object.__setattr__(self, "values", _freeze(values))

    @property
    def n_obs(self) -> int:
        """Number of rows T"""

        return int(self.values.shape[0])

    @property
    def k(self) -> int:
        """Number of variables"""

        return int(self.values.shape[1])

    def column(self, name: str) -> np.ndarray:
        """Returns one column as a read-only vector"""

        if name not in self.columns:
            raise InvalidOptionError(param="column", value=name, options=list(self.columns))

        return self.values[:, self.columns.index(name)]

    def select(self, columns: list) -> "AlignedPanel":
        """Returns the panel restricted (and reordered) to the given columns"""

        for name in columns:
            if name not in self.columns:
                raise InvalidOptionError(param="column", value=name, options=list(self.columns))

        indices = [self.columns.index(name) for name in columns]
        return AlignedPanel(
            entity_id=self.entity_id,
            dates=self.dates,
            columns=tuple(columns),
            values=self.values[:, indices],
        )

    def window(self, start=None, end=None) -> "AlignedPanel":
        """Returns the rows dated in ``[start, end)``; either bound may be None"""

        mask = np.ones(self.n_obs, dtype=bool)
        if start is not None:
            mask &= self.dates >= np.datetime64(pd.Timestamp(start).date(), "D")
        if end is not None:
            mask &= self.dates < np.datetime64(pd.Timestamp(end).date(), "D")

        return AlignedPanel(
            entity_id=self.entity_id,
            dates=self.dates[mask],
            columns=self.columns,
            values=self.values[mask],
        )

    def to_frame(self) -> pd.DataFrame:
        """Returns the panel as a DataFrame indexed by date"""

        return pd.DataFrame(
            np.array(self.values),
            index=pd.DatetimeIndex(self.dates.astype("datetime64[ns]"), name="date"),
            columns=list(self.columns),
        )

    def __repr__(self) -> str:
        return (
            f"AlignedPanel(entity_id={self.entity_id!r}, columns={self.columns}, "
            f"n_obs={self.n_obs})"
        )
