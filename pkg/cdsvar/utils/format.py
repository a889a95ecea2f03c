# -*- coding: utf-8 -*-

"""
cdsvar.utils.format
~~~~~~~~~~~~~~~~~~~

This module deals with converting results to the table layouts of the study report
(pandas frames written as CSV) and to JSON-ready documents.

Floats are never rounded here, so a number printed in a CSV table and the same number in
the JSON manifest share one text representation.

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

# Package imports
import datetime
import math
from enum import Enum

import numpy as np
import pandas as pd

# Local imports

# # Class Representation
from cdsvar.models.var import EquationStats


def to_jsonable(value):
    """Recursively converts numpy values, enums, dates and tuples to JSON types

    Non-finite floats become the strings ``"nan"``, ``"inf"`` and ``"-inf"``.

    Usage::
        >>> to_jsonable({"t": np.array([1.5, np.inf])})
        {'t': [1.5, 'inf']}
    """

    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}

    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]

    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())

    if isinstance(value, Enum):
        return value.value

    if isinstance(value, (np.bool_, bool)):
        return bool(value)

    if isinstance(value, (np.integer, int)):
        return int(value)

    if isinstance(value, (np.floating, float)):
        value = float(value)
        return value if math.isfinite(value) else str(value)

    if isinstance(value, (datetime.date, np.datetime64, pd.Timestamp)):
        return pd.Timestamp(value).date().isoformat()

    return value


def _row_order(spec) -> list:
    """Lag rows first, ``Const`` last, as the coefficient tables print them"""

    names = spec.regressor_names()
    if spec.include_intercept:
        return names[1:] + names[:1]

    return names


def var_table(fit, counts: np.ndarray = None) -> dict:
    """Coefficient table of a VarFit or an AggregatedFit

    :param fit: A single fit, or cross-entity means
    :type fit: VarFit | AggregatedFit

    :param counts: Optional k x m significance counts of the aggregated fits
    :type counts: numpy.ndarray

    :return: ``{"variables", "rows": {"RS(-1)": {equation: {coefficient, t_statistic[,
        significant]}}, ..., "Const": ...}, "footer": {equation: {statistic: value}}}``
    :rtype: dict
    """

    spec = fit.spec
    names = spec.regressor_names()
    rows = {}

    for name in _row_order(spec):
        column = names.index(name)
        rows[name] = {}
        for row, equation in enumerate(spec.variables):
            cell = {
                "coefficient": float(fit.coefficients[row, column]),
                "t_statistic": float(fit.t_statistics[row, column]),
            }
            if counts is not None:
                cell["significant"] = int(counts[row, column])
            rows[name][equation] = cell

    footer = {}
    for equation, stats in zip(spec.variables, fit.equation_stats):
        values = stats.to_dict() if isinstance(stats, EquationStats) else dict(stats)
        footer[equation] = {name: float(values[name]) for name in EquationStats.names()}

    return {
        "variables": list(spec.variables),
        "lag_order": spec.lag_order,
        "n_eff": fit.n_eff,
        "rows": rows,
        "footer": footer,
    }


def var_table_frames(table: dict) -> tuple:
    """Long frames of a :func:`var_table`: the coefficient rows and the footer

    :return: ``(rows, footer)``, columns ``row,equation,coefficient,t_statistic[,significant]``
        and ``statistic,equation,value``
    :rtype: tuple
    """

    rows = [
        {"row": name, "equation": equation, **cell}
        for name, cells in table["rows"].items()
        for equation, cell in cells.items()
    ]
    footer = [
        {"statistic": statistic, "equation": equation, "value": value}
        for statistic in EquationStats.names()
        for equation, values in table["footer"].items()
        for value in [values[statistic]]
    ]

    return pd.DataFrame(rows), pd.DataFrame(footer, columns=["statistic", "equation", "value"])


def irf_frame(irf) -> pd.DataFrame:
    """Long format ``horizon,shock_var,response_var,value``"""

    records = [
        {
            "horizon": horizon,
            "shock_var": shock,
            "response_var": response,
            "value": float(irf.responses[horizon, i, j]),
        }
        for horizon in range(irf.horizon + 1)
        for j, shock in enumerate(irf.ordering)
        for i, response in enumerate(irf.ordering)
    ]

    return pd.DataFrame(records, columns=["horizon", "shock_var", "response_var", "value"])


def irf_document(irf) -> dict:
    return {
        "horizon": irf.horizon,
        "ordering": list(irf.ordering),
        "shock_scale": irf.shock_scale,
        "responses": {
            f"{shock}->{response}": irf.response(response, shock)
            for shock in irf.ordering
            for response in irf.ordering
        },
    }


def grid_frame(grid) -> pd.DataFrame:
    """Causality grid: one yes/no row per entity, then a ``Total`` row of counts"""

    labels = grid.labels()
    records = [
        {
            "entity_id": entity_id,
            **{
                label: "yes" if row[direction].rejected else "no"
                for label, direction in zip(labels, grid.directions)
            },
        }
        for entity_id, row in grid.results.items()
    ]

    totals = grid.totals()
    records.append(
        {"entity_id": "Total", **{label: totals[direction]
                                  for label, direction in zip(labels, grid.directions)}}
    )

    return pd.DataFrame(records, columns=["entity_id"] + labels)


def grid_document(grid) -> dict:
    labels = grid.labels()
    totals = grid.totals()

    return {
        "directions": labels,
        "entities": {
            entity_id: {
                label: {
                    "f_statistic": row[direction].f_statistic,
                    "p_value": row[direction].p_value,
                    "dof": list(row[direction].dof),
                    "rejected": row[direction].rejected,
                }
                for label, direction in zip(labels, grid.directions)
            }
            for entity_id, row in grid.results.items()
        },
        "totals": {label: totals[direction] for label, direction in zip(labels, grid.directions)},
    }


def _nuisance(nuisance: dict) -> str:
    return ";".join(f"{key}={nuisance[key]}" for key in sorted(nuisance))


def unit_root_frame(batteries: dict) -> pd.DataFrame:
    """Rows ``entity_id,variable,test,statistic,cv1,cv5,cv10,reject5,nuisance``

    :param batteries: ``{entity_id: {variable: (adf, pp, kpss)}}``
    :type batteries: dict
    """

    columns = ["entity_id", "variable", "test", "statistic", "cv1", "cv5", "cv10", "reject5",
               "nuisance"]
    records = [
        {
            "entity_id": entity_id,
            "variable": variable,
            "test": report.test_kind.value,
            "statistic": report.statistic,
            "cv1": report.critical_values["1%"],
            "cv5": report.critical_values["5%"],
            "cv10": report.critical_values["10%"],
            "reject5": report.reject_at_5pct,
            "nuisance": _nuisance(report.nuisance),
        }
        for entity_id, battery in batteries.items()
        for variable, reports in battery.items()
        for report in reports
    ]

    return pd.DataFrame(records, columns=columns)


def unit_root_document(batteries: dict) -> dict:
    return {
        entity_id: {
            variable: {
                report.test_kind.value: {
                    "statistic": report.statistic,
                    "critical_values": report.critical_values,
                    "p_value": report.p_value,
                    "reject5": report.reject_at_5pct,
                    "reject1": report.reject_at_1pct,
                    "nuisance": report.nuisance,
                }
                for report in reports
            }
            for variable, reports in battery.items()
        }
        for entity_id, battery in batteries.items()
    }


def counts_frame(counts: dict) -> pd.DataFrame:
    """Stationarity counts as ``variable,test,reject5,reject1,tested`` rows"""

    records = [
        {"variable": variable, "test": test, **cell}
        for variable, cells in counts.items()
        for test, cell in cells.items()
    ]

    return pd.DataFrame(records, columns=["variable", "test", "reject5", "reject1", "tested"])


def matrix_frame(matrix: np.ndarray, labels: list) -> pd.DataFrame:
    """Square matrix labelled on both axes"""

    frame = pd.DataFrame(np.asarray(matrix, dtype=float), index=list(labels),
                         columns=list(labels))
    frame.index.name = "variable"
    return frame


def schedule_frame(schedule) -> pd.DataFrame:
    """Premium leg as ``period,payment`` rows"""

    return pd.DataFrame(list(schedule.payments), columns=["period", "payment"])


def cds_report_text(report: dict) -> str:
    """Human readable CDS report, the premium schedule followed by the two scenarios"""

    contract = report["contract"]
    lines = [
        f"Reference entity: {contract['entity']}",
        f"Notional: {contract['notional']}  Spread: {contract['spread_bp']} bp  "
        f"Tenor: {contract['tenor_years']}y  Payments per year: "
        f"{contract['payments_per_year']}  Recovery: {contract['recovery_rate']}",
        "",
        pd.DataFrame(report["schedule"]["payments"], columns=["period", "payment"])
        .to_string(index=False),
        "",
        f"Premium per period: {report['schedule']['per_period']}",
        f"Total premium: {report['schedule']['total']}",
        f"Default payout: {report['default_payout']}",
    ]

    for scenario, pnl in report["scenarios"].items():
        lines.append(
            f"{scenario}: buyer {pnl['buyer_pnl']}, seller {pnl['seller_pnl']}"
        )

    return "\n".join(lines)


def observations_frame(series_list: list) -> pd.DataFrame:
    """Rows ``date,entity_id,field_kind,value`` of raw series, in list then date order"""

    frames = [
        pd.DataFrame({
            "date": np.datetime_as_string(series.dates, unit="D"),
            "entity_id": series.entity_id,
            "field_kind": series.field_kind.value,
            "value": np.asarray(series.values, dtype=float),
        })
        for series in series_list
    ]

    if not frames:
        return pd.DataFrame(columns=["date", "entity_id", "field_kind", "value"])

    return pd.concat(frames, ignore_index=True)


def entities_frame(records: list) -> pd.DataFrame:
    """Rows ``entity_id,name,sector,market_cap,window_start,window_end``"""

    return pd.DataFrame(
        [
            {
                "entity_id": record.entity_id,
                "name": record.name,
                "sector": record.sector,
                "market_cap": record.market_cap,
                "window_start": record.window_start.isoformat(),
                "window_end": record.window_end.isoformat(),
            }
            for record in records
        ],
        columns=["entity_id", "name", "sector", "market_cap", "window_start", "window_end"],
    )


def autocorrelation_frame(average: dict) -> pd.DataFrame:
    """Mean autocorrelations, one row per lag and one column per variable"""

    frame = pd.DataFrame({name: np.asarray(values, dtype=float)
                          for name, values in average.items()})
    frame.index = pd.RangeIndex(1, len(frame) + 1, name="lag")
    return frame


def irf_entities_frame(irfs: dict) -> pd.DataFrame:
    """Long format of several entities, ``entity_id`` first"""

    frames = []
    for entity_id, irf in irfs.items():
        frame = irf_frame(irf)
        frame.insert(0, "entity_id", entity_id)
        frames.append(frame)

    return pd.concat(frames, ignore_index=True)
