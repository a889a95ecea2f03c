# -*- coding: utf-8 -*-

"""
cdsvar.cdsvar
~~~~~~~~~~~~~

This module implements the public functions of cdsvar, each one delegating to the
controller that holds its business logic.

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

# Local imports

# # Class Representation
from cdsvar.models.config import StudyConfig
from cdsvar.models.contract import CdsContract
from cdsvar.models.dgp import DgpSpec
from cdsvar.models.results import Deterministic
from cdsvar.models.series import AlignedPanel
from cdsvar.models.var import VarSpec

# # Business logic
import cdsvar.controller.causality as causality
import cdsvar.controller.cds as cds
import cdsvar.controller.market_data as market_data
import cdsvar.controller.simulate as simulator
import cdsvar.controller.stationarity as stationarity
import cdsvar.controller.study as study
import cdsvar.controller.var as var


def read_market_data(observations: str, entities: str) -> tuple:
    """Reads the observation and entity CSV files

    :param observations: Path of the ``date,entity_id,field_kind,value`` CSV
    :type observations: str

    :param entities: Path of the ``entity_id,name,sector,market_cap,window_start,window_end`` CSV
    :type entities: str

    :return: ``({entity_id: {FieldKind: ObservationSeries}}, [EntityRecord])``
    :rtype: tuple

    Usage::
        >>> import cdsvar.cdsvar as cv
        >>> raw, records = cv.read_market_data("observations.csv", "entities.csv")
    """

    return market_data.read_observations(observations), market_data.read_entities(entities)


def entity_panel(entity_id: str, raw: dict, variables: list = ("RS", "DBOND", "DCDS")):
    """Builds the RS/DBOND/DCDS difference panel of one entity from its raw series

    Usage::
        >>> panel = cv.entity_panel("FTE", raw["FTE"], ["RS", "DCDS"])
    """

    return market_data.entity_panel(entity_id, raw, list(variables))


def unit_root_battery(panel: AlignedPanel, deterministic=Deterministic.ConstantOnly) -> dict:
    """ADF, Phillips-Perron and KPSS on every column of a panel

    :return: ``{variable: (adf, pp, kpss)}``
    :rtype: dict
    """

    return stationarity.stationarity_battery(panel, Deterministic(deterministic))


def fit(panel: AlignedPanel, variables: list = None, lag_order: int = 5, start=None, end=None):
    """Fits a difference VAR by equation-wise least squares

    :param panel: The entity panel
    :type panel: AlignedPanel

    :param variables: Variables of the system, defaults to the panel columns
    :type variables: list

    :param lag_order: Lag order p
    :type lag_order: int

    :param start: First date of the sample, inclusive
    :param end: Last date of the sample, exclusive

    :return: The fit
    :rtype: VarFit

    Usage::
        >>> fitted = cv.fit(panel, lag_order=5)
        >>> fitted.equation_stats[2].r_squared
        0.05...
    """

    spec = VarSpec(
        variables=tuple(panel.columns if variables is None else variables),
        lag_order=lag_order,
        sample_window=(start, end),
    )
    return var.fit_var(panel, spec)


def granger(panel: AlignedPanel, cause: str, effect: str, variables: list = None,
            lag_order: int = 5, significance: float = 0.05):
    """Granger block-exclusion F-test of ``cause`` on ``effect``

    Usage::
        >>> cv.granger(panel, cause="RS", effect="DCDS").rejected
        True
    """

    spec = VarSpec(variables=tuple(panel.columns if variables is None else variables),
                   lag_order=lag_order)
    return causality.granger_test(panel, spec, cause, effect, significance)


def impulse_responses(fitted, horizon: int = 15, ordering: list = None):
    """Cholesky-orthogonalized impulse responses of a fit over horizons 0..horizon"""

    return causality.impulse_response(fitted, horizon, ordering)


def cds_report(contract: dict, credit_event: bool = False, periods_paid: int = None) -> dict:
    """Premium schedule, default payout and resolution of a contract given as a dict

    :param contract: ``{entity, notional, spread_bp, tenor_years, payments_per_year,
        recovery_rate}``
    :type contract: dict

    :return: ``{"schedule", "default_payout", "pnl"}``
    :rtype: dict

    Usage::
        >>> cv.cds_report({"entity": "FTE", "notional": 10000000, "spread_bp": 23.5,
        ...                "tenor_years": 5})["schedule"].total
        117500.0
    """

    parsed = CdsContract.from_dict(contract)
    periods = parsed.period_count if periods_paid is None else periods_paid

    return {
        "schedule": cds.premium_schedule(parsed),
        "default_payout": cds.default_payout(parsed),
        "pnl": cds.pnl_at_resolution(parsed, credit_event, periods),
    }


def simulate(document: dict) -> AlignedPanel:
    """Draws a panel from a DGP document, see ``DgpSpec.from_dict``"""

    return simulator.simulate(DgpSpec.from_dict(document))


def simulate_batch(seed: int, **kwargs) -> tuple:
    """Thirteen-entity panels and records shaped on the reference firms"""

    return simulator.paper_shaped_batch(seed, **kwargs)


def run_study(config: str, **overrides) -> dict:
    """Runs the study of a JSON configuration, ``overrides`` replacing its values

    Usage::
        >>> manifest = cv.run_study("cdsvar/data/study.json", output="report")
    """

    return study.run_study(StudyConfig.from_json(config, **overrides))


def run_cds(contract: str, periods_paid: int = None, output: str = None) -> dict:
    """CDS report of a contract JSON file"""

    return study.run_cds(contract, periods_paid=periods_paid, output=output)


def run_simulate(spec: str, out: str) -> dict:
    """Writes the dataset of a simulation spec JSON file into ``out``"""

    return study.run_simulate(spec, out)
