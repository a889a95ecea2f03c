# -*- coding: utf-8 -*-

"""
cdsvar.controller.market_data
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

This module implements the market data business logic: ingestion of the observations and
entities CSV files, construction of the share return (RS), bond spread change (DBOND) and
CDS spread change (DCDS) variables, panel alignment, and the descriptive statistics
(correlations, autocorrelations, yearly moments).

Spreads stay in the units they are quoted in; no basis point conversion happens here.

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

# Package imports
import numpy as np
import pandas as pd
from statsmodels.stats.diagnostic import acorr_ljungbox
from statsmodels.tsa.stattools import acf

# Local imports

# # Configs
from cdsvar.config.reference import StudyReference

# # Exception Handling
from cdsvar.models.exceptions import (
    EmptyList,
    EmptyOverlap,
    InvalidOptionError,
    InvalidSeriesError,
    MismatchedShapes,
    NonPositivePrice,
    ParseError,
    TargetOutsideBracket,
    TooShort,
    ZeroVariance,
)

# # Class Representation
from cdsvar.models.logger import Logger
from cdsvar.models.results import YieldProvenance
from cdsvar.models.series import (
    MARKET_COLUMNS,
    AlignedPanel,
    EntityRecord,
    FieldKind,
    ObservationSeries,
)

logger = Logger.setup_logger(name="cdsvar.controller.market_data")

OBSERVATION_COLUMNS = ["date", "entity_id", "field_kind", "value"]
ENTITY_COLUMNS = ["entity_id", "name", "sector", "market_cap", "window_start", "window_end"]


def log_return(prices: ObservationSeries) -> ObservationSeries:
    """Daily share return RS_t = ln(P_t / P_{t-1}), dividends excluded

    :param prices: Share prices
    :type prices: ObservationSeries

    '''
    :raise TooShort: Fewer than 2 prices
    :raise NonPositivePrice: A price <= 0
    '''

    :return: Returns dated by the later price, one fewer than the prices
    :rtype: ObservationSeries

    Usage::
        >>> log_return(ObservationSeries.from_points("FTE", "SharePrice",
                [("2004-01-02", 100.0), ("2004-01-05", 105.0)])).values
        array([0.04879016])
    """

    if len(prices) < 2:
        raise TooShort(operation="log_return", length=len(prices), required=2)

    bad = np.flatnonzero(~(prices.values > 0))
    if bad.size:
        raise NonPositivePrice(date=prices.dates[bad[0]], value=prices.values[bad[0]])

    return ObservationSeries(
        entity_id=prices.entity_id,
        field_kind=FieldKind.ShareReturn,
        dates=prices.dates[1:],
        values=np.log(prices.values[1:] / prices.values[:-1]),
    )


def _shared(first: ObservationSeries, second: ObservationSeries, operation: str) -> tuple:
    """Values of two series on their shared dates"""

    if first.entity_id != second.entity_id:
        raise InvalidSeriesError(
            first.entity_id, f"{operation} mixes entities {first.entity_id} and {second.entity_id}"
        )

    dates, first_index, second_index = np.intersect1d(
        first.dates, second.dates, assume_unique=True, return_indices=True
    )

    if dates.shape[0] == 0:
        raise EmptyOverlap(operation=operation)

    return dates, first.values[first_index], second.values[second_index]


def mid_cds_spread(bid: ObservationSeries, ask: ObservationSeries) -> ObservationSeries:
    """CDS spread as the average of bid and ask on each shared date

    '''
    :raise EmptyOverlap: No shared date
    :raise InvalidSeriesError: Ask below bid on a shared date
    '''
    """

    dates, bids, asks = _shared(bid, ask, "mid_cds_spread")

    crossed = np.flatnonzero(asks < bids)
    if crossed.size:
        raise InvalidSeriesError(
            bid.entity_id,
            f"CDS ask {asks[crossed[0]]} below bid {bids[crossed[0]]} on {dates[crossed[0]]}",
        )

    return ObservationSeries(
        entity_id=bid.entity_id,
        field_kind=FieldKind.CdsSpread,
        dates=dates,
        values=(bids + asks) / 2.0,
    )


def bond_spread(bond_yield: ObservationSeries, swap_rate: ObservationSeries) -> ObservationSeries:
    """Bond spread as the five-year bond yield minus the five-year swap rate

    '''
    :raise EmptyOverlap: No shared date
    '''
    """

    dates, yields, swaps = _shared(bond_yield, swap_rate, "bond_spread")

    return ObservationSeries(
        entity_id=bond_yield.entity_id,
        field_kind=FieldKind.BondSpread,
        dates=dates,
        values=yields - swaps,
    )


def interpolate_yield(below: tuple, above: tuple, target: float) -> float:
    """Linear interpolation in maturity between two ``(maturity_years, yield)`` quotes

    :param below: Shorter bond
    :type below: tuple

    :param above: Longer bond
    :type above: tuple

    :param target: Maturity to interpolate at, strictly between the two
    :type target: float

    '''
    :raise TargetOutsideBracket: Target not strictly inside the bracket
    '''

    :return: The interpolated yield
    :rtype: float

    Usage::
        >>> interpolate_yield((4, 4.0), (6, 5.0), 5)
        4.5
    """

    if not below[0] < target < above[0]:
        raise TargetOutsideBracket(below=below[0], above=above[0], target=target)

    return float(np.interp(target, [below[0], above[0]], [below[1], above[1]]))


def bond_yield_from_ladder(quotes: dict, target: float = 5.0, min_substitute: float = 3.5) -> tuple:
    """Five-year yield from the bonds an issuer has outstanding on one date

    The exact maturity is used when quoted, otherwise the nearest bonds on either side are
    interpolated, otherwise the bond closest to the target among those of at least
    ``min_substitute`` years replaces it directly.

    :param quotes: Maturity in years to yield
    :type quotes: dict

    :return: ``(yield, YieldProvenance)``
    :rtype: tuple

    '''
    :raise TargetOutsideBracket: No bond qualifies under any rule
    '''
    """

    if target in quotes:
        return float(quotes[target]), YieldProvenance.Exact

    shorter = [maturity for maturity in quotes if maturity < target]
    longer = [maturity for maturity in quotes if maturity > target]

    if shorter and longer:
        below, above = max(shorter), min(longer)
        value = interpolate_yield((below, quotes[below]), (above, quotes[above]), target)
        return value, YieldProvenance.Interpolated

    eligible = [maturity for maturity in quotes if maturity >= min_substitute]
    if eligible:
        nearest = min(eligible, key=lambda maturity: (abs(maturity - target), maturity))
        logger.debug(f"Substituting the {nearest}y bond for the {target}y yield")
        return float(quotes[nearest]), YieldProvenance.Substituted

    raise TargetOutsideBracket(
        below=max(shorter) if shorter else None,
        above=min(longer) if longer else None,
        target=target,
    )


def first_difference(series: ObservationSeries) -> ObservationSeries:
    """x_t - x_{t-1}, dated by the later observation

    '''
    :raise TooShort: Fewer than 2 points
    '''
    """

    if len(series) < 2:
        raise TooShort(operation="first_difference", length=len(series), required=2)

    return ObservationSeries(
        entity_id=series.entity_id,
        field_kind=series.field_kind.differenced(),
        dates=series.dates[1:],
        values=np.diff(series.values),
    )


def restrict(series: ObservationSeries, dates: np.ndarray) -> ObservationSeries:
    """Keeps only the points dated in ``dates``"""

    mask = np.isin(series.dates, dates)
    return ObservationSeries(
        entity_id=series.entity_id,
        field_kind=series.field_kind,
        dates=series.dates[mask],
        values=series.values[mask],
    )


def align(entity_id: str, series_list: list) -> AlignedPanel:
    """Inner join of two or three analysis variables on their dates

    Columns follow the order RS, DBOND, DCDS whatever the order of ``series_list``.

    :param entity_id: The entity all series belong to
    :type entity_id: str

    :param series_list: ShareReturn, BondSpreadChange and CdsSpreadChange series
    :type series_list: list

    '''
    :raise InvalidSeriesError: Foreign entity, duplicated variable or non-analysis kind
    :raise InvalidOptionError: Fewer than 2 variables
    :raise EmptyOverlap: No date shared by all series
    '''

    :return: The aligned panel
    :rtype: AlignedPanel
    """

    columns = {}
    for series in series_list:
        if series.entity_id != entity_id:
            raise InvalidSeriesError(entity_id, f"align received a series of {series.entity_id}")

        variable = series.field_kind.variable()
        if variable is None or variable in columns:
            raise InvalidSeriesError(
                entity_id, f"cannot align {series.field_kind.value} as a distinct variable"
            )

        columns[variable] = series.to_pandas()

    if len(columns) not in (2, 3):
        raise InvalidOptionError(
            param="series_list", value=sorted(columns), options=["2 or 3 analysis variables"]
        )

    ordered = [name for name in MARKET_COLUMNS if name in columns]
    frame = pd.concat([columns[name].rename(name) for name in ordered], axis=1, join="inner")
    frame = frame.dropna(how="any")

    if frame.empty:
        raise EmptyOverlap(operation="align")

    return AlignedPanel(
        entity_id=entity_id,
        dates=frame.index,
        columns=tuple(ordered),
        values=frame.to_numpy(dtype=float),
    )


def _vector(series) -> np.ndarray:
    """Values of a series, a panel column or a plain sequence"""

    if isinstance(series, ObservationSeries):
        return np.asarray(series.values, dtype=float)

    return np.asarray(series, dtype=float).reshape(-1)


def correlation_matrix(panel: AlignedPanel) -> np.ndarray:
    """Pearson correlation matrix of the panel columns

    '''
    :raise TooShort: Fewer than 3 rows
    :raise ZeroVariance: A constant column
    '''

    :return: k x k symmetric matrix with unit diagonal
    :rtype: numpy.ndarray
    """

    if panel.n_obs < 3:
        raise TooShort(operation="correlation_matrix", length=panel.n_obs, required=3)

    for name in panel.columns:
        if np.ptp(panel.column(name)) == 0:
            raise ZeroVariance(variable=name)

    matrix = np.corrcoef(panel.values, rowvar=False).reshape(panel.k, panel.k)
    matrix = (matrix + matrix.T) / 2.0
    np.fill_diagonal(matrix, 1.0)

    return matrix


def average_correlation(panels: list) -> np.ndarray:
    """Element-wise mean of the per-entity correlation matrices

    '''
    :raise EmptyList: No panel
    :raise MismatchedShapes: Panels with different columns
    '''
    """

    if not panels:
        raise EmptyList(operation="average_correlation")

    columns = panels[0].columns
    for panel in panels[1:]:
        if panel.columns != columns:
            raise MismatchedShapes(expected=columns, found=panel.columns)

    return np.mean([correlation_matrix(panel) for panel in panels], axis=0)


def correlation_signs(matrix: np.ndarray, columns: list, reference: dict = None) -> dict:
    """Compares an average correlation matrix with reference correlations by sign

    :param matrix: k x k correlation matrix, rows and columns in ``columns`` order
    :type matrix: numpy.ndarray

    :param reference: ``{(first, second): correlation}``, the reference sample's averages
        when omitted; pairs with a column outside ``columns`` are left out
    :type reference: dict

    :return: ``{"first-second": {"reference", "average", "same_sign"}}``
    :rtype: dict
    """

    reference = StudyReference.reference_correlations() if reference is None else reference
    columns = list(columns)

    checks = {}
    for (first, second), expected in reference.items():
        if first not in columns or second not in columns:
            continue
        value = float(matrix[columns.index(first), columns.index(second)])
        checks[f"{first}-{second}"] = {
            "reference": expected,
            "average": value,
            "same_sign": bool(np.sign(value) == np.sign(expected)),
        }

    return checks


def autocorrelation(series, max_lag: int) -> np.ndarray:
    """Sample autocorrelations at lags 1..max_lag

    :param series: An ObservationSeries or a vector
    :param max_lag: Last lag

    '''
    :raise TooShort: T <= max_lag + 1
    :raise ZeroVariance: A constant series
    '''

    :return: Vector of length max_lag
    :rtype: numpy.ndarray
    """

    values = _vector(series)

    if values.shape[0] <= max_lag + 1:
        raise TooShort(operation="autocorrelation", length=values.shape[0],
                       required=max_lag + 2)

    if np.ptp(values) == 0:
        raise ZeroVariance(variable="autocorrelation input")

    return np.asarray(acf(values, nlags=max_lag, fft=False))[1:]


def ljung_box(series, max_lag: int) -> dict:
    """Ljung-Box Q statistics and p-values at lags 1..max_lag

    :return: ``{"q": [...], "p_value": [...]}``
    :rtype: dict
    """

    values = _vector(series)

    if values.shape[0] <= max_lag + 1:
        raise TooShort(operation="ljung_box", length=values.shape[0], required=max_lag + 2)

    if np.ptp(values) == 0:
        raise ZeroVariance(variable="ljung_box input")

    table = acorr_ljungbox(values, lags=max_lag, return_df=True)
    return {
        "q": table["lb_stat"].to_numpy(dtype=float).tolist(),
        "p_value": table["lb_pvalue"].to_numpy(dtype=float).tolist(),
    }


def yearly_statistics(panel: AlignedPanel) -> pd.DataFrame:
    """Mean and volatility (sample standard deviation) of each column per calendar year

    :return: Frame indexed by year, columns ``<VAR>_mean`` and ``<VAR>_volatility``
    :rtype: pandas.DataFrame
    """

    frame = panel.to_frame()
    grouped = frame.groupby(frame.index.year).agg(["mean", "std"])
    grouped.columns = [
        f"{name}_{'mean' if statistic == 'mean' else 'volatility'}"
        for name, statistic in grouped.columns
    ]
    grouped.index.name = "year"

    return grouped


def _read_csv(path: str, columns: list) -> pd.DataFrame:
    """Reads a CSV as text, checking the header"""

    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False, skipinitialspace=True)
    except pd.errors.ParserError as exception:
        raise ParseError(path=path, row=None, column="<file>", value=str(exception))
    except pd.errors.EmptyDataError:
        raise ParseError(path=path, row=1, column="<header>", value="")

    for column in columns:
        if column not in frame.columns:
            raise ParseError(path=path, row=1, column=column, value=",".join(frame.columns))

    return frame


def _parse_column(frame: pd.DataFrame, path: str, column: str, parser) -> pd.Series:
    """Parses one text column, reporting the first failure by its 1-based file row"""

    parsed = parser(frame[column].str.strip())
    failed = np.flatnonzero(parsed.isna().to_numpy())

    if failed.size:
        # header is row 1
        row = int(failed[0])
        raise ParseError(path=path, row=row + 2, column=column, value=frame[column].iloc[row])

    return parsed


def _parse_dates(values: pd.Series) -> pd.Series:
    return pd.to_datetime(values, format="%Y-%m-%d", errors="coerce")


def _parse_numbers(values: pd.Series) -> pd.Series:
    parsed = pd.to_numeric(values, errors="coerce")
    return parsed.where(np.isfinite(parsed))


def _ladder_yields(entity_id: str, group: pd.DataFrame) -> tuple:
    """Five-year yield per date from one issuer's bond ladder, and how often each rule gave it"""

    dates, values = [], []
    counts = {rule.value: 0 for rule in YieldProvenance}
    counts["Unavailable"] = 0

    for date, quotes in group.groupby("date", sort=True):
        if quotes["maturity_years"].duplicated().any():
            raise InvalidSeriesError(
                entity_id, f"two BondYield quotes share a maturity on {date.date().isoformat()}"
            )
        try:
            value, rule = bond_yield_from_ladder(
                dict(zip(quotes["maturity_years"], quotes["value"]))
            )
        except TargetOutsideBracket as exception:
            counts["Unavailable"] += 1
            logger.warning(f"{entity_id}: no five-year yield on {date.date()}, {exception}")
            continue

        dates.append(date)
        values.append(value)
        counts[rule.value] += 1

    series = ObservationSeries(
        entity_id=entity_id,
        field_kind=FieldKind.BondYield,
        dates=dates,
        values=values,
    )
    return series, counts


def read_observations(path: str, provenance: bool = False):
    """Reads the ``date,entity_id,field_kind,value`` CSV

    An optional ``maturity_years`` column turns the BondYield rows into maturity ladders:
    each date's five-year yield is then taken from ``bond_yield_from_ladder``. A BondYield
    row with an empty maturity is the five-year yield itself.

    :param path: The CSV path
    :type path: str

    :param provenance: Also return how each entity's five-year yields were obtained
    :type provenance: bool

    '''
    :raise ParseError: Missing column, bad date, unknown field kind or non-numeric value
    :raise InvalidSeriesError: Duplicated dates within an (entity, field kind) series
    '''

    :return: ``{entity_id: {FieldKind: ObservationSeries}}``; with ``provenance``, a pair
        whose second item is ``{entity_id: {rule: number of dates}}`` for the entities
        with bond yields
    :rtype: dict | tuple

    Usage::
        >>> observations = read_observations("cdsvar/data/observations.csv")
        >>> observations["FTE"][FieldKind.SharePrice]
        ObservationSeries(entity_id='FTE', field_kind=SharePrice, n=...)
    """

    frame = _read_csv(path, OBSERVATION_COLUMNS)

    kinds = {kind.value: kind.value for kind in FieldKind.raw_kinds()}
    frame["date"] = _parse_column(frame, path, "date", _parse_dates)
    frame["field_kind"] = _parse_column(frame, path, "field_kind",
                                        lambda values: values.map(kinds))
    frame["value"] = _parse_column(frame, path, "value", _parse_numbers)

    ladder = "maturity_years" in frame.columns
    if ladder:
        bonds = frame["field_kind"] == FieldKind.BondYield.value
        maturities = frame["maturity_years"].str.strip()
        # other kinds and blank maturities read as the five-year point
        frame["maturity_years"] = maturities.where((maturities != "") & bonds, "5")
        frame["maturity_years"] = _parse_column(frame, path, "maturity_years", _parse_numbers)

    empty = np.flatnonzero((frame["entity_id"].str.strip() == "").to_numpy())
    if empty.size:
        raise ParseError(path=path, row=int(empty[0]) + 2, column="entity_id", value="")

    frame["entity_id"] = frame["entity_id"].str.strip()

    observations, rules = {}, {}
    for (entity_id, kind), group in frame.groupby(["entity_id", "field_kind"], sort=True):
        group = group.sort_values("date", kind="mergesort")

        if FieldKind(kind) == FieldKind.BondYield:
            if ladder:
                series, rules[entity_id] = _ladder_yields(entity_id, group)
                if len(series) > 0:
                    observations.setdefault(entity_id, {})[FieldKind.BondYield] = series
                continue
            rules[entity_id] = {rule.value: 0 for rule in YieldProvenance}
            rules[entity_id][YieldProvenance.Exact.value] = len(group)
            rules[entity_id]["Unavailable"] = 0

        observations.setdefault(entity_id, {})[FieldKind(kind)] = ObservationSeries(
            entity_id=entity_id,
            field_kind=FieldKind(kind),
            dates=group["date"].to_numpy(),
            values=group["value"].to_numpy(dtype=float),
        )

    logger.info(f"Read {len(frame)} observations for {len(observations)} entities from {path}")

    if provenance:
        return observations, rules

    return observations


def read_entities(path: str) -> list:
    """Reads the ``entity_id,name,sector,market_cap,window_start,window_end`` CSV

    '''
    :raise ParseError: Missing column, bad date or non-numeric capitalization
    '''

    :return: EntityRecord list, in file order
    :rtype: list
    """

    frame = _read_csv(path, ENTITY_COLUMNS)
    frame["market_cap"] = _parse_column(frame, path, "market_cap", _parse_numbers)
    frame["window_start"] = _parse_column(frame, path, "window_start", _parse_dates)
    frame["window_end"] = _parse_column(frame, path, "window_end", _parse_dates)

    records = [
        EntityRecord(
            entity_id=row.entity_id.strip(),
            name=row.name,
            sector=row.sector,
            market_cap=float(row.market_cap),
            window_start=row.window_start.date(),
            window_end=row.window_end.date(),
        )
        for row in frame.itertuples(index=False)
    ]

    logger.info(f"Read {len(records)} entity records from {path}")

    return records


def level_series(entity_id: str, raw: dict) -> dict:
    """Untransformed levels (log share price, bond spread, CDS spread) on their own dates

    :param raw: ``{FieldKind: ObservationSeries}`` of one entity
    :type raw: dict

    :return: ``{"RS": log prices, "DBOND": bond spread, "DCDS": CDS spread}`` for the
        variables whose inputs are present
    :rtype: dict
    """

    levels = {}
    if FieldKind.SharePrice in raw:
        prices = raw[FieldKind.SharePrice]
        levels["RS"] = ObservationSeries(entity_id=entity_id, field_kind=FieldKind.LogPrice,
                                         dates=prices.dates, values=np.log(prices.values))
    if FieldKind.BondYield in raw and FieldKind.SwapRate5y in raw:
        levels["DBOND"] = bond_spread(raw[FieldKind.BondYield], raw[FieldKind.SwapRate5y])
    if FieldKind.CdsBid in raw and FieldKind.CdsAsk in raw:
        levels["DCDS"] = mid_cds_spread(raw[FieldKind.CdsBid], raw[FieldKind.CdsAsk])

    return levels


def entity_panel(entity_id: str, raw: dict, variables: list) -> AlignedPanel:
    """Builds the difference panel of one entity from its raw series

    Raw inputs are first joined on the dates they all share, then returns and first
    differences are taken on that common grid and aligned.

    :param entity_id: The entity
    :type entity_id: str

    :param raw: ``{FieldKind: ObservationSeries}`` of the entity
    :type raw: dict

    :param variables: Two or three of RS, DBOND, DCDS
    :type variables: list

    '''
    :raise InvalidSeriesError: A raw input the variables need is missing
    :raise EmptyOverlap: The raw inputs share no date
    '''

    :return: The aligned panel, columns in RS, DBOND, DCDS order
    :rtype: AlignedPanel
    """

    needs = {
        "RS": [FieldKind.SharePrice],
        "DBOND": [FieldKind.BondYield, FieldKind.SwapRate5y],
        "DCDS": [FieldKind.CdsBid, FieldKind.CdsAsk],
    }

    for variable in variables:
        missing = [kind.value for kind in needs[variable] if kind not in raw]
        if missing:
            raise InvalidSeriesError(
                entity_id, f"{variable} needs {', '.join(missing)}, which is not in the data"
            )

    levels = {name: series for name, series in level_series(entity_id, raw).items()
              if name in variables}

    common = None
    for series in levels.values():
        common = series.dates if common is None else np.intersect1d(common, series.dates)

    if common is None or common.shape[0] == 0:
        raise EmptyOverlap(operation="entity_panel")

    transformed = []
    for name in variables:
        if name == "RS":
            transformed.append(log_return(restrict(raw[FieldKind.SharePrice], common)))
        else:
            transformed.append(first_difference(restrict(levels[name], common)))

    logger.debug(f"{entity_id}: {common.shape[0]} common raw dates for {', '.join(variables)}")

    return align(entity_id, transformed)
