# -*- coding: utf-8 -*-

"""
tests.controller.test_stationarity
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

For testing the functions under cdsvar/controller/stationarity.py

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

import numpy as np
import pytest

from cdsvar.controller.simulate import generator, simulate
from cdsvar.controller.stationarity import (
    KPSS_CRITICAL_VALUES,
    adf_test,
    kpss_test,
    pp_test,
    series_battery,
    stationarity_battery,
    stationarity_counts,
)
from cdsvar.models.dgp import DgpSpec
from cdsvar.models.exceptions import DegenerateRegression, EmptyList, TooShort
from cdsvar.models.results import Deterministic
from cdsvar.models.results import TestKind as Kind

from tests.helper.builders import noise_panel

REPLICATIONS = 1000
LENGTH = 1000


def noise(seed: int, length: int = LENGTH) -> np.ndarray:
    return generator(seed).standard_normal(length)


def walk(seed: int, length: int = LENGTH) -> np.ndarray:
    return np.cumsum(noise(seed, length))


def test_adf_on_noise_and_walk():

    stationary = adf_test(noise(1))
    assert stationary.test_kind == Kind.ADF
    assert stationary.reject_at_5pct
    assert stationary.nuisance["deterministic"] == "ConstantOnly"
    assert 0 <= stationary.nuisance["lags"] <= 21

    # the difference of a random walk is stationary
    assert adf_test(np.diff(walk(2))).reject_at_5pct


def test_adf_fixed_lag_and_trend():

    report = adf_test(noise(3), Deterministic.ConstantAndTrend, max_lag=2)

    assert report.nuisance == {"lags": 2, "deterministic": "ConstantAndTrend"}
    # trend critical values lie further in the left tail
    assert report.critical_values["5%"] < adf_test(noise(3), max_lag=2).critical_values["5%"]


def test_adf_is_location_invariant():

    values = walk(4, 300)

    shifted = adf_test(values + 250.0, max_lag=3)

    assert shifted.statistic == pytest.approx(adf_test(values, max_lag=3).statistic, rel=1e-8)


def test_adf_errors():

    with pytest.raises(TooShort):
        adf_test(noise(5, 24))

    with pytest.raises(DegenerateRegression):
        adf_test(np.full(100, 3.0))


def test_pp_test():

    report = pp_test(noise(6))

    assert report.test_kind == Kind.PhillipsPerron
    assert report.reject_at_5pct
    assert report.critical_values["1%"] < report.critical_values["5%"]
    assert not pp_test(walk(7)).reject_at_1pct
    assert pp_test(noise(6), bandwidth=3).nuisance["bandwidth"] == 3

    with pytest.raises(TooShort):
        pp_test(noise(6, 10))


def test_kpss_test():

    report = kpss_test(noise(8))

    assert report.test_kind == Kind.KPSS
    assert report.critical_values == KPSS_CRITICAL_VALUES[Deterministic.ConstantOnly]
    assert kpss_test(walk(9)).reject_at_5pct


def test_kpss_constant_series():

    report = kpss_test(np.full(40, 2.5))

    assert report.statistic == 0.0
    assert not report.reject_at_5pct


def test_kpss_is_sign_invariant():

    values = walk(10, 400)

    assert kpss_test(-values).statistic == pytest.approx(kpss_test(values).statistic, rel=1e-12)


def test_stationarity_battery():

    battery = stationarity_battery(noise_panel(11, 300, columns=("RS", "DBOND", "DCDS")))

    assert list(battery) == ["RS", "DBOND", "DCDS"]
    assert sum(len(reports) for reports in battery.values()) == 9
    assert [report.test_kind for report in battery["RS"]] == [Kind.ADF, Kind.PhillipsPerron,
                                                             Kind.KPSS]


def test_stationarity_counts():

    batteries = [
        stationarity_battery(noise_panel(seed, 200, columns=("RS", "DCDS")))
        for seed in range(3)
    ]
    batteries.append(series_battery({"RS": walk(12, 200), "DCDS": walk(13, 200)}))

    counts = stationarity_counts(batteries)

    assert counts["RS"]["ADF"]["tested"] == 4
    assert counts["RS"]["ADF"]["reject5"] == 3
    assert counts["DCDS"]["PhillipsPerron"]["reject5"] == 3
    assert counts["DCDS"]["KPSS"]["reject1"] <= counts["DCDS"]["KPSS"]["reject5"]

    with pytest.raises(EmptyList):
        stationarity_counts([])


def rejection_rate(test, draw) -> float:
    return float(np.mean([
        test(draw(seed)).reject_at_5pct for seed in range(REPLICATIONS)
    ]))


def ar_half(seed: int) -> np.ndarray:
    return simulate(DgpSpec.ar1(0.5, length=LENGTH, seed=seed)).column("X1")


@pytest.mark.montecarlo
def test_adf_size_and_power():

    assert 0.03 <= rejection_rate(adf_test, walk) <= 0.07
    assert rejection_rate(adf_test, noise) >= 0.90
    assert rejection_rate(adf_test, ar_half) >= 0.90


@pytest.mark.montecarlo
def test_pp_size_and_power():

    assert 0.03 <= rejection_rate(pp_test, walk) <= 0.07
    assert rejection_rate(pp_test, noise) >= 0.90
    assert rejection_rate(pp_test, ar_half) >= 0.90


@pytest.mark.montecarlo
def test_kpss_size_and_power():

    assert rejection_rate(kpss_test, walk) >= 0.95
    assert rejection_rate(kpss_test, noise) <= 0.10
