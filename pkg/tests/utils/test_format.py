# -*- coding: utf-8 -*-

"""
tests.utils.test_format
~~~~~~~~~~~~~~~~~~~~~~~

For testing the functions under cdsvar/utils/format.py

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

import datetime
import os

import numpy as np

from cdsvar.controller.causality import impulse_response
from cdsvar.controller.cds import premium_schedule
from cdsvar.controller.study import run_cds
from cdsvar.models.contract import BasisSignal, CdsContract
from cdsvar.models.results import CausalityGrid, GrangerResult
from cdsvar.models.var import VarSpec
from cdsvar.utils import format as fmt

from tests.helper.builders import fake_fit, series

CONTRACT = os.path.join(os.path.dirname(__file__), "..", "..", "cdsvar", "data",
                        "contract_fte_2007.json")


def test_to_jsonable():

    converted = fmt.to_jsonable({
        "array": np.array([1.5, np.inf, -np.inf]),
        "pair": (np.int64(3), np.bool_(True)),
        "signal": BasisSignal.NoArbitrage,
        "date": datetime.date(2004, 1, 1),
        "day": np.datetime64("2004-01-02"),
        7: np.float32(0.5),
    })

    assert converted == {
        "array": [1.5, "inf", "-inf"],
        "pair": [3, True],
        "signal": "NoArbitrage",
        "date": "2004-01-01",
        "day": "2004-01-02",
        "7": 0.5,
    }


def test_var_table():

    spec = VarSpec(("RS", "DCDS"), 2)
    coefficients = np.arange(10.0).reshape(2, 5)
    fit = fake_fit(spec, coefficients=coefficients, t_statistics=-coefficients)

    table = fmt.var_table(fit, counts=np.full((2, 5), 4))

    assert list(table["rows"]) == ["RS(-1)", "RS(-2)", "DCDS(-1)", "DCDS(-2)", "Const"]
    assert table["rows"]["Const"]["DCDS"] == {"coefficient": 5.0, "t_statistic": -5.0,
                                             "significant": 4}
    assert table["rows"]["RS(-2)"]["RS"]["coefficient"] == 2.0
    assert table["lag_order"] == 2
    assert table["n_eff"] == 100
    assert table["footer"]["RS"]["sc"] == 2.5

    rows, footer = fmt.var_table_frames(table)
    assert len(rows) == 10
    assert list(rows.columns) == ["row", "equation", "coefficient", "t_statistic", "significant"]
    assert len(footer) == 16
    assert "significant" not in fmt.var_table(fit)["rows"]["Const"]["RS"]


def test_irf_frames():

    irf = impulse_response(fake_fit(VarSpec(("RS", "DCDS"), 1)), horizon=3)

    frame = fmt.irf_frame(irf)
    assert list(frame.columns) == ["horizon", "shock_var", "response_var", "value"]
    assert len(frame) == 4 * 4
    assert frame.iloc[0].tolist() == [0, "RS", "RS", 1.0]

    document = fmt.irf_document(irf)
    assert set(document["responses"]) == {"RS->RS", "RS->DCDS", "DCDS->RS", "DCDS->DCDS"}

    entities = fmt.irf_entities_frame({"FTE": irf, "TOTAL": irf})
    assert list(entities.columns)[0] == "entity_id"
    assert len(entities) == 32


def test_grid_frame():

    pairs = (("DCDS", "RS"), ("RS", "DCDS"))
    grid = CausalityGrid(
        model="VAR2",
        directions=pairs,
        results={
            "FTE": {pairs[0]: GrangerResult(*pairs[0], 0.5, 0.7, (5, 90)),
                    pairs[1]: GrangerResult(*pairs[1], 4.0, 0.002, (5, 90))},
        },
    )

    frame = fmt.grid_frame(grid)

    assert list(frame.columns) == ["entity_id", "DCDS cause RS", "RS cause DCDS"]
    assert frame.iloc[0].tolist() == ["FTE", "no", "yes"]
    assert frame.iloc[-1].tolist() == ["Total", 0, 1]
    assert fmt.grid_document(grid)["totals"] == {"DCDS cause RS": 0, "RS cause DCDS": 1}


def test_cds_frames():

    contract = CdsContract("FTE", 10000000.0, 23.5, 5, 4, 0.4)

    frame = fmt.schedule_frame(premium_schedule(contract))
    assert list(frame.columns) == ["period", "payment"]
    assert frame["payment"].sum() == 117500.0

    text = fmt.cds_report_text(run_cds(CONTRACT))
    assert "Total premium: 117500.0" in text
    assert "Default payout: 6000000.0" in text


def test_observation_frames():

    frame = fmt.observations_frame([series([100.0, 101.0]), series([5.0], "CdsBid")])

    assert list(frame.columns) == ["date", "entity_id", "field_kind", "value"]
    assert frame["field_kind"].tolist() == ["SharePrice", "SharePrice", "CdsBid"]
    assert frame["date"].tolist()[:2] == ["2004-01-05", "2004-01-06"]
    assert fmt.observations_frame([]).empty


def test_matrix_and_autocorrelation_frames():

    matrix = fmt.matrix_frame(np.eye(2), ["RS", "DCDS"])
    assert matrix.index.name == "variable"
    assert matrix.loc["RS", "RS"] == 1.0

    autocorrelation = fmt.autocorrelation_frame({"RS": [0.1, 0.05], "DCDS": [0.2, 0.0]})
    assert autocorrelation.index.name == "lag"
    assert autocorrelation.index.tolist() == [1, 2]
    assert autocorrelation.loc[1, "DCDS"] == 0.2
