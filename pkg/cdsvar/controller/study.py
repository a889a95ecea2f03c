# -*- coding: utf-8 -*-

"""
cdsvar.controller.study
~~~~~~~~~~~~~~~~~~~~~~~

This module implements the batch front ends: the full study run (ingestion, descriptive
statistics, stationarity tests, VAR fits per model and period, Granger grids, impulse
responses, report files and manifest), the CDS contract report and the dataset
simulation.

Entities are estimated in parallel threads; results are collected in input order and the
report is assembled on one thread, so a run is a deterministic function of its inputs.

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

# Package imports
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, replace

import numpy as np

# Local imports

# # Configs
from cdsvar.config.stats import StatsDefaults

# # Exception Handling
from cdsvar.models.exceptions import (
    EmptyOverlap,
    InvalidSeriesError,
    NoEstimableEntity,
    ParseError,
    StatisticalError,
)

# # Class Representation
from cdsvar.models.config import StudyConfig
from cdsvar.models.contract import CdsContract
from cdsvar.models.dgp import DgpSpec
from cdsvar.models.logger import Logger
from cdsvar.models.series import MARKET_COLUMNS, EntityRecord, FieldKind
from cdsvar.models.var import VarSpec

# # Utilities
from cdsvar.utils import format as fmt
from cdsvar.utils import plot
from cdsvar.utils.extract import extract_samples, extract_statistics
from cdsvar.utils.filter import pipeline
from cdsvar.utils.time import day_after, iso, to_date
from cdsvar.utils.verify import breakpoints_check, contract_check, simulate_check

# # Business logic
from cdsvar.controller import market_data
from cdsvar.controller.causality import (
    bidirectional_counts,
    cap_weighted_irf,
    cap_weights,
    causality_comparison,
    causality_table,
    cumulative_response,
    impulse_response,
)
from cdsvar.controller.cds import default_payout, pnl_at_resolution, premium_schedule
from cdsvar.controller.save import (
    save_as_csv_controller,
    save_as_json_controller,
    save_as_svg_controller,
)
from cdsvar.controller.simulate import paper_shaped_batch, panel_to_observations, simulate
from cdsvar.controller.stationarity import series_battery, stationarity_battery, stationarity_counts
from cdsvar.controller.var import (
    aggregate_fits,
    fit_var,
    hypothesis_summary,
    significance_count,
    subperiod_windows,
)

logger = Logger.setup_logger(name="cdsvar.controller.study")

# Raw kinds the models are built from; market capitalization comes from the entities file
MODEL_INPUTS = [kind.value for kind in FieldKind.raw_kinds() if kind != FieldKind.MarketCap]


class _Report:
    """Collects the files of one report directory, relative paths in write order"""

    def __init__(self, root: str) -> None:
        self.root = root
        self.files = []

    def csv(self, frame, *parts, index: bool = False) -> None:
        save_as_csv_controller(frame, os.path.join(self.root, *parts), index=index)
        self.files.append("/".join(parts))

    def json(self, document, *parts) -> None:
        save_as_json_controller(document, os.path.join(self.root, *parts))
        self.files.append("/".join(parts))

    def svg(self, figure, *parts) -> None:
        try:
            save_as_svg_controller(figure, os.path.join(self.root, *parts))
        finally:
            plot.close(figure)
        self.files.append("/".join(parts))


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            document = json.load(handle)
    except json.JSONDecodeError as exception:
        raise ParseError(path=path, row=exception.lineno, column=exception.colno,
                         value=exception.msg)

    if not isinstance(document, dict):
        raise ParseError(path=path, row=None, column="<document>", value=type(document))

    return document


def period_names(breakpoints: list) -> list:
    """``full`` followed by ``sub1``..``subN`` for N - 1 breakpoints"""

    return ["full"] + [f"sub{index}" for index in range(1, len(breakpoints) + 2)]


def entity_inputs(observations: dict, records: list) -> tuple:
    """Raw series of every entity restricted to its observation window

    :return: ``({entity_id: {FieldKind: ObservationSeries}}, {entity_id: reason})``
    :rtype: tuple
    """

    raw, skipped = {}, {}

    for record in records:
        if record.entity_id not in observations:
            skipped[record.entity_id] = "no observations"
            logger.warning(f"{record.entity_id}: no observations, skipped")
            continue

        filtered = pipeline(
            data=list(observations[record.entity_id].values()),
            components=[
                {"filter": "entity_ids", "entity_ids": [record.entity_id]},
                {"filter": "min_date", "min_date": record.window_start},
                {"filter": "max_date", "max_date": record.window_end},
                {"filter": "field_kinds", "field_kinds": MODEL_INPUTS},
            ],
        )
        raw[record.entity_id] = {series.field_kind: series for series in filtered}

    known = {record.entity_id for record in records}
    for entity_id in sorted(observations):
        if entity_id not in known:
            skipped[entity_id] = "no entity record"
            logger.warning(f"{entity_id}: observations without an entity record, skipped")

    return raw, skipped


def model_panels(model: str, variables: list, raw: dict) -> tuple:
    """Difference panels of every entity having the inputs a model needs

    :return: ``({entity_id: AlignedPanel}, {entity_id: reason})``
    :rtype: tuple
    """

    panels, skipped = {}, {}

    for entity_id, series in raw.items():
        try:
            panels[entity_id] = market_data.entity_panel(entity_id, series, variables)
        except (InvalidSeriesError, EmptyOverlap, StatisticalError) as exception:
            skipped[entity_id] = str(exception)
            logger.warning(f"{model}: {entity_id} skipped, {exception}")

    return panels, skipped


def _fit_one(panel, spec: VarSpec) -> tuple:
    try:
        return fit_var(panel, spec), None
    except StatisticalError as exception:
        return None, str(exception)


def fit_entities(panels: dict, spec: VarSpec, workers: int = 1) -> tuple:
    """Fits every panel on ``workers`` threads; results keep the panel order

    :return: ``({entity_id: VarFit}, {entity_id: reason})``
    :rtype: tuple
    """

    entity_ids = list(panels)
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        outcomes = list(executor.map(lambda entity_id: _fit_one(panels[entity_id], spec),
                                     entity_ids))

    fits, skipped = {}, {}
    for entity_id, (fit, reason) in zip(entity_ids, outcomes):
        if fit is None:
            skipped[entity_id] = reason
            logger.warning(f"{entity_id} not estimated on {spec.sample_window}: {reason}")
        else:
            fits[entity_id] = fit

    return fits, skipped


def _before(series, end) -> np.ndarray:
    """Values dated before an exclusive end, all of them without one"""

    if end is None:
        return np.asarray(series.values)

    return np.asarray(series.values[series.dates < np.datetime64(end, "D")])


def descriptives(panels: dict, raw: dict, spec: VarSpec) -> dict:
    """Correlations, autocorrelations, yearly moments and unit-root batteries of the
    panels over the model's full window, plus the battery of the untransformed levels

    :return: JSON-ready sections and the unit-root batteries
    :rtype: dict
    """

    correlations, autocorrelations, yearly, samples = {}, {}, {}, {}
    batteries, level_batteries, skipped = {}, {}, {}
    _, end = spec.sample_window

    for entity_id, panel in panels.items():
        sample = panel.select(list(spec.variables)).window(None, end)
        samples[entity_id] = sample
        try:
            correlations[entity_id] = market_data.correlation_matrix(sample)
            autocorrelations[entity_id] = {
                name: {
                    "acf": market_data.autocorrelation(sample.column(name), spec.lag_order),
                    **market_data.ljung_box(sample.column(name), spec.lag_order),
                }
                for name in sample.columns
            }
            batteries[entity_id] = stationarity_battery(sample)

            levels = market_data.level_series(entity_id, raw[entity_id])
            level_batteries[entity_id] = series_battery({
                series.field_kind.value: _before(series, end)
                for name, series in levels.items() if name in spec.variables
            })
        except StatisticalError as exception:
            skipped[entity_id] = str(exception)
            logger.warning(f"{entity_id}: descriptive statistics skipped, {exception}")
            for section in (correlations, autocorrelations, batteries, level_batteries):
                section.pop(entity_id, None)
            continue

        frame = market_data.yearly_statistics(sample)
        yearly[entity_id] = {str(year): row for year, row in frame.to_dict(orient="index").items()}

    document = {
        "correlations": correlations,
        "autocorrelation": autocorrelations,
        "yearly": yearly,
        "skipped": skipped,
    }

    if correlations:
        document["average_correlation"] = market_data.average_correlation(
            [samples[entity_id] for entity_id in correlations]
        )
        document["correlation_signs"] = market_data.correlation_signs(
            document["average_correlation"], list(spec.variables)
        )
        document["average_autocorrelation"] = {
            name: np.mean([entity[name]["acf"] for entity in autocorrelations.values()], axis=0)
            for name in spec.variables
        }
        document["stationarity_counts"] = stationarity_counts(list(batteries.values()))
        document["level_stationarity_counts"] = stationarity_counts(
            list(level_batteries.values())
        )

    return {"document": document, "batteries": batteries, "level_batteries": level_batteries}


def entity_irfs(fits: dict, caps: dict, horizon: int) -> dict:
    """Per-entity impulse responses, their cap-weighted mean and its cumulative sum"""

    irfs, skipped = {}, {}
    for entity_id, fit in fits.items():
        try:
            irfs[entity_id] = impulse_response(fit, horizon)
        except StatisticalError as exception:
            skipped[entity_id] = str(exception)
            logger.warning(f"{entity_id}: impulse responses skipped, {exception}")

    weighted = [(irfs[entity_id], caps[entity_id]) for entity_id in irfs if entity_id in caps]
    aggregate = cap_weighted_irf(weighted) if weighted else None

    return {
        "entities": irfs,
        "cap_weighted": aggregate,
        "cumulative": None if aggregate is None else cumulative_response(aggregate),
        "skipped": skipped,
    }


def _write_period(report: _Report, model: str, period: str, section: dict, plots: bool) -> None:
    table = section["aggregate_table"]
    rows, footer = fmt.var_table_frames(table)
    report.csv(rows, model, period, "coefficients.csv")
    report.csv(footer, model, period, "equation_statistics.csv")
    report.csv(fmt.grid_frame(section["grid"]), model, period, "causality.csv")

    irf = section["irf"]
    if irf["cap_weighted"] is None:
        return

    report.csv(fmt.irf_frame(irf["cap_weighted"]), model, period, "irf_cap_weighted.csv")
    report.csv(fmt.irf_frame(irf["cumulative"]), model, period, "irf_cumulative.csv")

    report.csv(fmt.irf_entities_frame(irf["entities"]), model, period, "irf_entities.csv")

    if not plots:
        return

    aggregate = irf["cap_weighted"]
    for shock in aggregate.ordering:
        for response in aggregate.ordering:
            # a fall in the share market is the shock of interest
            negate = shock == "RS"
            title = (f"{model} {period}: {response} after a "
                     f"{'negative' if negate else 'positive'} {shock} shock")
            figure = plot.irf_figure(aggregate, response, shock, title, negate=negate)
            report.svg(figure, model, period, f"irf_{shock}_{response}.svg")


def _estimate_period(config: StudyConfig, model: str, period: str, period_spec: VarSpec,
                     panels: dict, caps: dict, report: _Report) -> tuple:
    """Fits, Granger grid and impulse responses of one model over one period

    :return: ``(period section, CausalityGrid or None)``
    :rtype: tuple
    """

    start, stop = period_spec.sample_window
    fits, fit_skipped = fit_entities(panels, period_spec, config.workers)

    if not fits:
        logger.warning(f"{model} {period}: no entity estimated")
        return {"window": [iso(start), iso(stop)], "skipped": fit_skipped, "entities": 0}, None

    aggregate = aggregate_fits(list(fits.values()))
    counts = significance_count(list(fits.values()), config.significance)
    grid = causality_table(
        {entity_id: panels[entity_id] for entity_id in fits},
        period_spec, model=f"{model} {period}", significance=config.significance,
    )
    irf = entity_irfs(fits, caps, config.horizon)

    section = {
        "window": [iso(start), iso(stop)],
        "entities": len(fits),
        "skipped": fit_skipped,
        "samples": extract_samples(fits),
        "fits": {entity_id: fmt.var_table(fit) for entity_id, fit in fits.items()},
        "r_squared": extract_statistics(fits, ["r_squared"])["r_squared"],
        "aggregate": fmt.var_table(aggregate, counts),
        "causality": fmt.grid_document(grid),
        "bidirectional": bidirectional_counts(grid),
        "hypotheses": hypothesis_summary(fits, grid, caps),
        "irf": {
            "entities": {entity_id: fmt.irf_document(result)
                         for entity_id, result in irf["entities"].items()},
            "cap_weighted": None if irf["cap_weighted"] is None
            else fmt.irf_document(irf["cap_weighted"]),
            "cumulative": None if irf["cumulative"] is None
            else fmt.irf_document(irf["cumulative"]),
            "skipped": irf["skipped"],
        },
    }

    _write_period(
        report, model, period,
        {"aggregate_table": section["aggregate"], "grid": grid, "irf": irf},
        config.plots,
    )
    logger.info(f"{model} {period}: {len(fits)} entities estimated, "
                f"{len(fit_skipped)} skipped")

    return section, grid


def data_window(panels: list, spec: VarSpec) -> tuple:
    """First and last dates the panels hold inside the VarSpec window"""

    start, end = spec.sample_window
    dates = [panel.window(start, end).dates for panel in panels]
    dates = [values for values in dates if values.size]
    if not dates:
        return None, None

    return (to_date(min(values[0] for values in dates)),
            to_date(max(values[-1] for values in dates)))


def run_study(config: StudyConfig) -> dict:
    """Runs the whole study and writes the report directory

    For every model: entity panels, descriptive statistics and unit-root batteries on the
    full window, then for the full period and each sub-period the entity fits, mean
    coefficient tables with significance counts, Granger grid, hypothesis evidence and
    impulse responses. Entities that cannot be estimated are skipped with a warning and
    recorded in the manifest.

    :param config: The study configuration
    :type config: StudyConfig

    '''
    :raise ParseError: An input file does not parse
    :raise NoEstimableEntity: A model has no estimable entity over its full period
    '''

    :return: The manifest, also written as ``manifest.json``
    :rtype: dict

    Usage::
        >>> from cdsvar.models.config import StudyConfig
        >>> manifest = run_study(StudyConfig.from_json("cdsvar/data/study.json"))
        >>> manifest["models"]["VAR2"]["periods"]["full"]["causality"]["totals"]
        {'DCDS cause RS': 1, 'RS cause DCDS': 11}
    """

    observations, provenance = market_data.read_observations(config.observations,
                                                             provenance=True)
    records = market_data.read_entities(config.entities)
    raw, input_skipped = entity_inputs(observations, records)

    caps = {record.entity_id: record.market_cap for record in records}
    weights = dict(zip(caps, cap_weights(list(caps.values())))) if caps else {}
    report = _Report(config.output)

    manifest = {
        "config": {
            **{key: value for key, value in config.to_dict().items()
               if key not in ("observations", "entities", "output", "workers")},
            "observations": os.path.basename(config.observations),
            "entities": os.path.basename(config.entities),
        },
        "random_algorithm": StatsDefaults.random_algorithm,
        "entities": {
            record.entity_id: {
                "name": record.name,
                "sector": record.sector,
                "market_cap": record.market_cap,
                "weight": weights[record.entity_id],
                "window": [iso(record.window_start), iso(record.window_end)],
                "bond_yield_provenance": provenance.get(record.entity_id),
            }
            for record in records
        },
        "skipped": input_skipped,
        "models": {},
    }

    grids = {}
    for model, variables in config.models.items():
        end = config.period_ends.get(model)
        spec = VarSpec(
            variables=tuple(variables),
            lag_order=config.lag_order,
            sample_window=(None, None if end is None else day_after(end)),
        )
        logger.info(f"{model}: {', '.join(variables)}, VAR({spec.lag_order}), ends {end}")

        panels, panel_skipped = model_panels(model, variables, raw)
        described = descriptives(panels, raw, spec)

        section = {
            "variables": list(variables),
            "period_end": end,
            "skipped": panel_skipped,
            "descriptives": described["document"],
            "unit_root": fmt.unit_root_document(described["batteries"]),
            "level_unit_root": fmt.unit_root_document(described["level_batteries"]),
            "periods": {},
        }

        if described["batteries"]:
            report.csv(fmt.unit_root_frame(described["batteries"]), model, "unit_root.csv")
            report.csv(fmt.unit_root_frame(described["level_batteries"]), model,
                       "level_unit_root.csv")
            report.csv(fmt.counts_frame(described["document"]["stationarity_counts"]), model,
                       "stationarity_counts.csv")
            report.csv(
                fmt.matrix_frame(described["document"]["average_correlation"], variables),
                model, "correlations.csv", index=True,
            )
            report.csv(
                fmt.autocorrelation_frame(described["document"]["average_autocorrelation"]),
                model, "autocorrelation.csv", index=True,
            )

        full, grid = _estimate_period(config, model, "full", spec, panels, caps, report)
        if grid is None:
            raise NoEstimableEntity(model=model, skipped={**panel_skipped, **full["skipped"]})
        grids[(model, "full")] = grid
        section["periods"]["full"] = full

        first, last = data_window([panels[entity_id] for entity_id in full["fits"]], spec)
        section["data_window"] = [iso(first), iso(last)]
        breakpoints_check(config.breakpoints, first, last)

        windows = subperiod_windows(spec, config.breakpoints) if config.breakpoints else []
        for period, (start, stop) in zip(period_names(config.breakpoints)[1:], windows):
            section["periods"][period], grid = _estimate_period(
                config, model, period, spec.with_window(start, stop), panels, caps, report
            )
            if grid is not None:
                grids[(model, period)] = grid

        manifest["models"][model] = section

    manifest["comparison"] = causality_comparison(grids, ("RS", "DCDS"))
    report.json(manifest["comparison"], "causality_comparison.json")

    manifest["files"] = sorted(report.files + ["manifest.json"])
    report.json(manifest, "manifest.json")

    logger.info(f"Report written to {config.output}, {len(manifest['files'])} files")

    return manifest


def run_cds(path: str, periods_paid: int = None, output: str = None) -> dict:
    """CDS contract report: premium schedule, default payout and both resolutions

    :param path: Contract JSON, ``{entity, notional, spread_bp, tenor_years,
        payments_per_year, recovery_rate}``
    :type path: str

    :param periods_paid: Premium periods paid before the credit event, 0 by default
    :type periods_paid: int

    :param output: Optional directory receiving ``schedule.csv`` and ``cds.json``
    :type output: str

    '''
    :raise ParseError: The document does not parse
    :raise InvalidContractError: The contract violates its invariants
    '''

    :return: The report
    :rtype: dict

    Usage::
        >>> run_cds("cdsvar/data/contract_fte_2007.json")["schedule"]["total"]
        117500.0
    """

    document = _load_json(path)
    contract_check(document)
    contract = CdsContract.from_dict(document)

    schedule = premium_schedule(contract)
    event_periods = 0 if periods_paid is None else periods_paid

    report = {
        "contract": contract.to_dict(),
        "schedule": {
            "payments": [list(payment) for payment in schedule.payments],
            "per_period": schedule.per_period,
            "total": schedule.total,
        },
        "default_payout": default_payout(contract),
        "scenarios": {
            "no credit event": asdict(
                pnl_at_resolution(contract, False, contract.period_count)
            ),
            f"credit event after {event_periods} periods": asdict(
                pnl_at_resolution(contract, True, event_periods)
            ),
        },
    }

    if output is not None:
        save_as_csv_controller(fmt.schedule_frame(schedule), os.path.join(output, "schedule.csv"))
        save_as_json_controller(report, os.path.join(output, "cds.json"))

    return report


def _market_dataset(panels: dict, records: list, levels: dict) -> tuple:
    """Raw series and entity records whose windows start on the first raw date"""

    series_list, dataset_records = [], []
    for record in records:
        observations = panel_to_observations(panels[record.entity_id], levels)
        series_list.extend(observations)
        dataset_records.append(
            replace(record, window_start=observations[0].dates[0].astype(object))
        )

    return series_list, dataset_records


def run_simulate(path: str, out: str) -> dict:
    """Writes a simulated dataset in the ingestion format

    ``mode: paper_batch`` (default) draws the thirteen-entity batch; ``mode: dgp`` draws
    one process from its ``dgp`` document, written as market data when its columns are
    market variables and as a plain panel otherwise.

    :param path: Simulation spec JSON
    :type path: str

    :param out: Output directory
    :type out: str

    '''
    :raise ParseError: The document does not parse
    :raise UnstableProcess: A process flagged stable is not
    '''

    :return: The dataset manifest, also written as ``simulation.json``
    :rtype: dict
    """

    document = _load_json(path)
    simulate_check(document)
    mode = document.get("mode", "paper_batch")
    manifest = {"mode": mode, "random_algorithm": StatsDefaults.random_algorithm,
                "spec": document}

    if mode == "paper_batch":
        panels, records = paper_shaped_batch(
            seed=document.get("seed", 0),
            rs_to_dcds=document.get("rs_to_dcds"),
            dcds_to_dbond=document.get("dcds_to_dbond"),
            coupling_scale=document.get("coupling_scale", 1.0),
            start_date=document.get("start_date"),
            end_date=document.get("end_date"),
        )
        series_list, records = _market_dataset(panels, records, document.get("levels"))
    else:
        dgp = DgpSpec.from_dict(document["dgp"])
        panel = simulate(dgp)
        entity_id = document.get("entity", "SIM")
        panel = replace(panel, entity_id=entity_id)

        if not all(name in MARKET_COLUMNS for name in panel.columns):
            frame = panel.to_frame()
            frame.index = np.datetime_as_string(panel.dates, unit="D")
            frame.index.name = "date"
            save_as_csv_controller(frame, os.path.join(out, "panel.csv"), index=True)
            manifest.update({"files": ["panel.csv", "simulation.json"], "rows": panel.n_obs})
            save_as_json_controller(manifest, os.path.join(out, "simulation.json"))
            return manifest

        record = EntityRecord(
            entity_id=entity_id, name=entity_id, sector="Simulated", market_cap=1.0,
            window_start=panel.dates[0].astype(object), window_end=panel.dates[-1].astype(object),
        )
        series_list, records = _market_dataset({entity_id: panel}, [record],
                                               document.get("levels"))

    observations = fmt.observations_frame(series_list)
    save_as_csv_controller(observations, os.path.join(out, "observations.csv"))
    save_as_csv_controller(fmt.entities_frame(records), os.path.join(out, "entities.csv"))

    manifest.update({
        "files": ["entities.csv", "observations.csv", "simulation.json"],
        "entities": [record.entity_id for record in records],
        "rows": int(len(observations)),
    })
    save_as_json_controller(manifest, os.path.join(out, "simulation.json"))

    logger.info(f"Simulated {len(records)} entities, {len(observations)} rows into {out}")

    return manifest


