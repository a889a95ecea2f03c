# -*- coding: utf-8 -*-

"""
tests.models.test_results
~~~~~~~~~~~~~~~~~~~~~~~~~

For testing the classes under cdsvar/models/results.py

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

import numpy as np
import pytest

from cdsvar.models.exceptions import InvalidOptionError, MismatchedShapes
from cdsvar.models.results import (
    CausalityGrid,
    GrangerResult,
    IrfResult,
    TestKind as Kind,
    UnitRootReport,
)

LEFT = {"1%": -3.43, "5%": -2.86, "10%": -2.57}
RIGHT = {"1%": 0.739, "5%": 0.463, "10%": 0.347}


def test_unit_root_report_left_tail():

    between = UnitRootReport(Kind.ADF, -3.0, LEFT, {"lags": 1})
    beyond = UnitRootReport(Kind.PhillipsPerron, -4.0, LEFT, {"bandwidth": 4})

    assert between.reject_at_5pct and not between.reject_at_1pct
    assert beyond.reject_at_5pct and beyond.reject_at_1pct


def test_unit_root_report_right_tail():

    report = UnitRootReport(Kind.KPSS, 0.5, RIGHT, {"bandwidth": 4})

    assert report.reject_at_5pct
    assert not report.reject_at_1pct
    assert not UnitRootReport(Kind.KPSS, 0.0, RIGHT, {}).reject_at_5pct


def test_unit_root_report_critical_value_order():

    with pytest.raises(InvalidOptionError):
        UnitRootReport(Kind.KPSS, 0.5, LEFT, {})

    with pytest.raises(InvalidOptionError):
        UnitRootReport(Kind.ADF, -3.0, RIGHT, {})


def test_granger_result_decisions():

    result = GrangerResult("RS", "DCDS", 3.1, 0.03, (5, 80), significance=0.01)

    assert result.reject_at_5pct
    assert not result.rejected
    assert result.direction == "RS cause DCDS"
    assert result.dof == (5, 80)


def test_irf_result_shape():

    responses = np.arange(12.0).reshape(3, 2, 2)
    irf = IrfResult(horizon=2, ordering=("RS", "DCDS"), responses=responses,
                    shock_scale=[1.0, 2.0])

    # response of DCDS to an RS shock
    assert np.array_equal(irf.response("DCDS", "RS"), [2.0, 6.0, 10.0])
    assert irf.k == 2

    with pytest.raises(MismatchedShapes):
        IrfResult(horizon=3, ordering=("RS", "DCDS"), responses=responses,
                  shock_scale=[1.0, 2.0])

    with pytest.raises(InvalidOptionError):
        irf.response("DBOND", "RS")


def test_causality_grid_totals():

    def result(cause, effect, p_value):
        return GrangerResult(cause, effect, 1.0, p_value, (5, 90))

    grid = CausalityGrid(
        model="VAR2",
        directions=(("DCDS", "RS"), ("RS", "DCDS")),
        results={
            "A": {("DCDS", "RS"): result("DCDS", "RS", 0.5),
                  ("RS", "DCDS"): result("RS", "DCDS", 0.01)},
            "B": {("DCDS", "RS"): result("DCDS", "RS", 0.04),
                  ("RS", "DCDS"): result("RS", "DCDS", 0.001)},
        },
    )

    assert grid.labels() == ["DCDS cause RS", "RS cause DCDS"]
    assert grid.totals() == {("DCDS", "RS"): 1, ("RS", "DCDS"): 2}
    assert grid.decision("A", "RS", "DCDS")
    assert grid.entity_ids == ["A", "B"]
