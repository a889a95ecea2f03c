# -*- coding: utf-8 -*-

"""
cdsvar.controller.simulate
~~~~~~~~~~~~~~~~~~~~~~~~~~

This module implements the seeded data-generating processes: single DGP simulation, the
thirteen-entity batch shaped on the reference firms, and the conversion of a simulated
panel back to raw market observations.

Every draw comes from ``numpy.random.Generator(numpy.random.Philox(seed))``.

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

# Package imports
import numpy as np
import pandas as pd

# Local imports

# # Configs
from cdsvar.config.reference import StudyReference
from cdsvar.config.stats import StatsDefaults

# # Exception Handling
from cdsvar.models.exceptions import InvalidOptionError

# # Class Representation
from cdsvar.models.dgp import DgpKind, DgpSpec
from cdsvar.models.logger import Logger
from cdsvar.models.series import (
    MARKET_COLUMNS,
    AlignedPanel,
    EntityRecord,
    FieldKind,
    ObservationSeries,
)

logger = Logger.setup_logger(name="cdsvar.controller.simulate")


def generator(seed: int) -> np.random.Generator:
    """Counter-based random stream of a seed"""

    return np.random.Generator(np.random.Philox(seed))


def simulate(spec: DgpSpec) -> AlignedPanel:
    """Draws a panel from a DGP

    Gaussian innovations are the Cholesky factor of the innovation covariance times
    standard normals; the first ``burn_in`` rows are discarded. Rows are dated on
    consecutive business days from ``spec.start_date``.

    :param spec: The process
    :type spec: DgpSpec

    :return: T x k panel named after ``spec.columns``
    :rtype: AlignedPanel

    Usage::
        >>> panel = simulate(DgpSpec.ar1(0.9, length=2000, seed=7))
        >>> panel.n_obs
        2000
    """

    rng = generator(spec.seed)
    k, total = spec.dimension, spec.burn_in + spec.length

    factor = np.linalg.cholesky(spec.innovation_covariance)
    innovations = rng.standard_normal((total, k)) @ factor.T

    if spec.kind == DgpKind.WhiteNoise:
        values = spec.intercept + innovations[spec.burn_in:]
    elif spec.kind == DgpKind.RandomWalk:
        values = np.cumsum(innovations[spec.burn_in:], axis=0)
    else:
        values = _recursion(spec, innovations)[spec.burn_in:]

    return AlignedPanel(
        entity_id=f"DGP-{spec.seed}",
        dates=pd.bdate_range(start=spec.start_date, periods=spec.length),
        columns=spec.columns,
        values=values,
    )


def _recursion(spec: DgpSpec, innovations: np.ndarray) -> np.ndarray:
    """y_t = c + sum_j A_j y_{t-j} + e_t from zero initial values"""

    p = spec.lag_order
    total, k = innovations.shape
    values = np.zeros((total + p, k))

    # stacked[:, j*k:(j+1)*k] multiplies y_{t-j-1}
    stacked = np.hstack(list(spec.lag_matrices))
    for row in range(total):
        history = values[row:row + p][::-1].reshape(-1)
        values[row + p] = spec.intercept + stacked @ history + innovations[row]

    return values[p:]


def paper_shaped_dgp(
    seed: int,
    length: int,
    rs_to_dcds: bool,
    dcds_to_dbond: bool,
    coupling_scale: float = 1.0,
    start_date: str = "2001-01-01",
) -> DgpSpec:
    """VAR(5) in (RS, DBOND, DCDS) with the magnitudes of the reference market data

    Returns have a 0.02 daily deviation, bond spread changes 9 and CDS spread changes 6
    index points. Bond spread changes mean-revert through negative own lags; a share
    return shock lowers CDS spread changes over three days when ``rs_to_dcds``, and CDS
    changes feed into bond changes when ``dcds_to_dbond``.
    """

    lags = np.zeros((5, 3, 3))
    rs, dbond, dcds = 0, 1, 2

    lags[:, dbond, dbond] = [-0.43, -0.27, -0.18, -0.11, -0.04]
    lags[:, dcds, dcds] = [0.05, 0.02, 0.0, 0.0, 0.0]

    if rs_to_dcds:
        lags[:, dcds, rs] = coupling_scale * np.array([-40.0, -25.0, -10.0, 0.0, 0.0])
    if dcds_to_dbond:
        lags[:, dbond, dcds] = coupling_scale * np.array([0.25, 0.15, 0.05, 0.0, 0.0])

    deviations = np.array([0.02, 9.0, 6.0])
    correlation = np.array([
        [1.0, -0.08, -0.20],
        [-0.08, 1.0, 0.08],
        [-0.20, 0.08, 1.0],
    ])

    return DgpSpec(
        kind=DgpKind.VarProcess,
        dimension=3,
        lag_matrices=lags,
        intercept=np.zeros(3),
        innovation_covariance=correlation * np.outer(deviations, deviations),
        length=length,
        burn_in=200,
        seed=seed,
        stable=True,
        columns=MARKET_COLUMNS,
        start_date=start_date,
    )


def entity_seeds(seed: int, count: int) -> list:
    """Independent 64-bit seeds, one per entity, spawned from one seed"""

    children = np.random.SeedSequence(seed).spawn(count)
    return [int(child.generate_state(1, dtype=np.uint64)[0]) for child in children]


def paper_shaped_batch(
    seed: int,
    rs_to_dcds: list = None,
    dcds_to_dbond: list = None,
    coupling_scale: float = 1.0,
    start_date: str = None,
    end_date: str = None,
) -> tuple:
    """Thirteen entity panels shaped on the reference firms

    Each entity gets one row per business day of its reference window (optionally
    clipped to ``[start_date, end_date]``) and its reference market capitalization.

    :param seed: Batch seed
    :type seed: int

    :param rs_to_dcds: Entities with share return to CDS coupling, 11 by default
    :type rs_to_dcds: list

    :param dcds_to_dbond: Entities with CDS to bond coupling, 8 by default
    :type dcds_to_dbond: list

    :param coupling_scale: Multiplier of every coupling coefficient, 0 disables them
    :type coupling_scale: float

    :return: ``({entity_id: AlignedPanel}, [EntityRecord])``
    :rtype: tuple

    Usage::
        >>> panels, records = paper_shaped_batch(seed=20070208)
        >>> len(panels), len(records)
        (13, 13)
    """

    rs_to_dcds = StudyReference.rs_to_dcds_entities() if rs_to_dcds is None else rs_to_dcds
    dcds_to_dbond = (
        StudyReference.dcds_to_dbond_entities() if dcds_to_dbond is None else dcds_to_dbond
    )

    firms = StudyReference.firms()
    known = [firm[0] for firm in firms]
    for entity_id in list(rs_to_dcds) + list(dcds_to_dbond):
        if entity_id not in known:
            raise InvalidOptionError(param="coupled entity", value=entity_id, options=known)

    panels, records = {}, []
    for firm, entity_seed in zip(firms, entity_seeds(seed, len(firms))):
        entity_id, name, sector, cap, window_start, window_end, _ = firm

        start = max(pd.Timestamp(window_start), pd.Timestamp(start_date or window_start))
        end = min(pd.Timestamp(window_end), pd.Timestamp(end_date or window_end))
        length = len(pd.bdate_range(start=start, end=end))

        dgp = paper_shaped_dgp(
            seed=entity_seed,
            length=length,
            rs_to_dcds=entity_id in rs_to_dcds,
            dcds_to_dbond=entity_id in dcds_to_dbond,
            coupling_scale=coupling_scale,
            start_date=start.date().isoformat(),
        )
        simulated = simulate(dgp)

        panels[entity_id] = AlignedPanel(
            entity_id=entity_id,
            dates=simulated.dates,
            columns=simulated.columns,
            values=simulated.values,
        )
        records.append(
            EntityRecord(
                entity_id=entity_id,
                name=name,
                sector=sector,
                market_cap=cap,
                window_start=start.date(),
                window_end=end.date(),
            )
        )

    logger.info(f"Simulated {len(panels)} entities, algorithm {StatsDefaults.random_algorithm}")

    return panels, records


def panel_to_observations(panel: AlignedPanel, levels: dict = None) -> list:
    """Raw series whose ingestion reproduces a market panel

    Prices compound the returns from 100, spreads cumulate their changes from the
    starting levels, the swap rate stays at its starting level and the CDS quote is the
    mid plus or minus half of a one point bid-ask. The raw grid starts one business day
    before the panel.

    :param panel: Panel with market columns (RS, DBOND, DCDS)
    :type panel: AlignedPanel

    :param levels: Starting ``price``, ``cds``, ``bond_spread``, ``swap`` levels
    :type levels: dict

    :return: ObservationSeries list in SharePrice, BondYield, SwapRate5y, CdsBid, CdsAsk
        order, for the variables the panel carries
    :rtype: list
    """

    for name in panel.columns:
        if name not in MARKET_COLUMNS:
            raise InvalidOptionError(param="column", value=name, options=list(MARKET_COLUMNS))

    start = {"price": 100.0, "cds": 1000.0, "bond_spread": 1000.0, "swap": 400.0}
    start.update(levels or {})

    first = pd.Timestamp(panel.dates[0]) - pd.offsets.BDay(1)
    dates = np.concatenate([[np.datetime64(first.date(), "D")], panel.dates])

    def path(initial: float, changes: np.ndarray) -> np.ndarray:
        return initial + np.concatenate([[0.0], np.cumsum(changes)])

    def series(kind: FieldKind, values: np.ndarray) -> ObservationSeries:
        return ObservationSeries(entity_id=panel.entity_id, field_kind=kind, dates=dates,
                                 values=values)

    observations = []
    if "RS" in panel.columns:
        prices = start["price"] * np.exp(path(0.0, panel.column("RS")))
        observations.append(series(FieldKind.SharePrice, prices))

    if "DBOND" in panel.columns:
        swap = np.full(dates.shape[0], start["swap"])
        spread = path(start["bond_spread"], panel.column("DBOND"))
        observations.append(series(FieldKind.BondYield, swap + spread))
        observations.append(series(FieldKind.SwapRate5y, swap))

    if "DCDS" in panel.columns:
        mid = path(start["cds"], panel.column("DCDS"))
        observations.append(series(FieldKind.CdsBid, mid - 0.5))
        observations.append(series(FieldKind.CdsAsk, mid + 0.5))

    return observations
