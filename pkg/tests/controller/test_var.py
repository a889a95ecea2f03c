# -*- coding: utf-8 -*-

"""
tests.controller.test_var
~~~~~~~~~~~~~~~~~~~~~~~~~

For testing the functions under cdsvar/controller/var.py

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

import datetime
import math

import numpy as np
import pytest

from cdsvar.controller.simulate import generator, paper_shaped_batch, simulate
from cdsvar.controller.var import (
    aggregate_fits,
    build_design,
    fit_var,
    hypothesis_summary,
    lag_sum,
    lagged_design,
    significance_count,
    subperiod_fits,
    subperiod_windows,
)
from cdsvar.models.dgp import DgpSpec
from cdsvar.models.exceptions import (
    EmptyList,
    HeterogeneousSpecs,
    InsufficientSample,
    InvalidOptionError,
    RankDeficientDesign,
    ZeroVariance,
)
from cdsvar.models.results import CausalityGrid, GrangerResult
from cdsvar.models.series import MARKET_COLUMNS
from cdsvar.models.var import VarSpec

from tests.helper.builders import fake_fit, noise_panel, panel

SYSTEM = ("RS", "DBOND", "DCDS")


def test_design_shape():

    response, design = build_design(noise_panel(1, 100, columns=SYSTEM), VarSpec(SYSTEM, 5))

    assert response.shape == (95, 3)
    assert design.shape == (95, 16)
    assert np.all(design[:, 0] == 1.0)


def test_design_of_zeros():

    response, design = build_design(panel(np.zeros((40, 3)), columns=SYSTEM), VarSpec(SYSTEM, 5))

    assert np.all(response == 0.0)
    assert np.all(design[:, 1:] == 0.0)


def test_design_lag_columns():

    values = np.column_stack([np.arange(8.0), 10.0 * np.arange(8.0)])

    response, design = lagged_design(values, VarSpec(("X1", "X2"), 2, min_extra_rows=0))

    assert np.array_equal(response[:, 0], [2.0, 3.0, 4.0, 5.0, 6.0, 7.0])
    # X1(-1), X1(-2), X2(-1), X2(-2)
    assert np.array_equal(design[0], [1.0, 1.0, 0.0, 10.0, 0.0])
    assert np.array_equal(design[-1], [1.0, 6.0, 5.0, 60.0, 50.0])


def test_design_needs_enough_rows():

    with pytest.raises(InsufficientSample):
        build_design(noise_panel(2, 29, columns=SYSTEM), VarSpec(SYSTEM, 5))

    # 3*5 + 5 + 10 rows
    assert build_design(noise_panel(2, 30, columns=SYSTEM), VarSpec(SYSTEM, 5))[1].shape == (25, 16)


def test_fit_matches_normal_equations():

    values = np.array([
        [0.3, -1.2],
        [1.1, 0.4],
        [-0.7, 0.9],
        [0.2, -0.5],
        [1.6, 1.3],
        [-0.4, 0.1],
    ])
    spec = VarSpec(("X1", "X2"), 1, min_extra_rows=0)

    fit = fit_var(panel(values), spec)

    design = np.column_stack([np.ones(5), values[:-1]])
    expected = np.linalg.solve(design.T @ design, design.T @ values[1:])
    assert fit.n_eff == 5
    assert np.allclose(fit.coefficients, expected.T, atol=1e-10)
    assert np.allclose(fit.xtx_inverse, np.linalg.inv(design.T @ design), atol=1e-10)


def test_fit_statistics():

    spec = VarSpec(SYSTEM, 2)
    data = noise_panel(3, 250, columns=SYSTEM)

    fit = fit_var(data, spec)
    response, design = build_design(data, spec)

    assert fit.coefficients.shape == (3, 7)
    assert fit.df_resid == 248 - 7
    assert fit.metadata["T_eff"] == 248
    # residuals are orthogonal to every regressor
    assert np.allclose(design.T @ fit.residuals, 0.0, atol=1e-8)
    assert np.allclose(fit.residual_covariance, fit.residuals.T @ fit.residuals / 248)
    assert np.allclose(fit.t_statistics, fit.coefficients / fit.standard_errors)

    for index, stats in enumerate(fit.equation_stats):
        y = response[:, index]
        fitted = y - fit.residuals[:, index]
        n, m = 248, 7
        log_likelihood = -n / 2.0 * (1.0 + math.log(2.0 * math.pi) + math.log(stats.ssr / n))

        assert stats.r_squared == pytest.approx(np.corrcoef(y, fitted)[0, 1] ** 2, rel=1e-8)
        assert stats.log_likelihood == pytest.approx(log_likelihood, rel=1e-10)
        assert stats.aic == pytest.approx(-2.0 * log_likelihood / n + 2.0 * m / n, rel=1e-10)
        assert stats.sc == pytest.approx(-2.0 * log_likelihood / n + m * math.log(n) / n,
                                         rel=1e-10)
        assert stats.mean_dependent == pytest.approx(y.mean())
        assert stats.adj_r_squared < stats.r_squared


def test_fit_exact_system():

    values = [[1.0, 0.0]]
    for _ in range(39):
        x1, x2 = values[-1]
        values.append([0.1 + 0.9 * x1 - 0.3 * x2, 0.2 + 0.3 * x1 + 0.9 * x2])

    fit = fit_var(panel(values), VarSpec(("X1", "X2"), 1))

    assert np.allclose(fit.coefficients, [[0.1, 0.9, -0.3], [0.2, 0.3, 0.9]], atol=1e-8)
    for stats in fit.equation_stats:
        assert stats.r_squared == pytest.approx(1.0, abs=1e-10)


def test_fit_errors():

    values = noise_panel(4, 60).values
    duplicated = np.column_stack([values[:, 0], values[:, 0]])

    with pytest.raises(RankDeficientDesign):
        fit_var(panel(duplicated), VarSpec(("X1", "X2"), 2))

    constant = np.column_stack([values[:, 0], np.full(60, 2.0)])
    with pytest.raises(ZeroVariance):
        fit_var(panel(constant), VarSpec(("X1", "X2"), 2, include_intercept=False))


def test_fit_recovers_coefficients():

    lag = [[0.5, 0.1], [0.0, 0.3]]
    data = simulate(DgpSpec.var_process([lag], length=5000, seed=5))

    fit = fit_var(data, VarSpec(("X1", "X2"), 1))

    assert np.allclose(fit.lag_matrices()[0], lag, atol=0.05)
    assert np.allclose(fit.intercept, 0.0, atol=0.05)


def var5_lags() -> np.ndarray:
    """Stable 3-variable VAR(5): one cross-coupled block decaying by half per lag"""

    base = np.array([[0.3, 0.1, 0.0], [0.0, 0.2, 0.1], [0.05, 0.0, 0.25]])
    return np.array([base * 0.5 ** lag for lag in range(5)])


@pytest.mark.montecarlo
def test_fit_coverage_of_true_coefficients():

    lags = var5_lags()
    spec = VarSpec(("X1", "X2", "X3"), 5)
    truth = np.column_stack([np.zeros(3), np.transpose(lags, (1, 2, 0)).reshape(3, 15)])

    inside = []
    for seed in range(50):
        fit = fit_var(simulate(DgpSpec.var_process(lags, length=1500, seed=seed)), spec)
        inside.append(np.abs(fit.coefficients - truth) <= 3.0 * fit.standard_errors)

    assert np.mean(inside) >= 0.95


@pytest.mark.montecarlo
def test_fit_error_shrinks_with_sample_size():

    lag = np.array([[0.5, 0.1], [0.0, 0.3]])
    spec = VarSpec(("X1", "X2"), 1)

    def rmse(length: int) -> float:
        errors = [
            fit_var(simulate(DgpSpec.var_process([lag], length=length, seed=seed)),
                    spec).lag_matrices()[0] - lag
            for seed in range(40)
        ]
        return float(np.sqrt(np.mean(np.square(errors))))

    small, medium, large = rmse(500), rmse(2000), rmse(8000)

    # four times the sample halves the error
    assert medium / small == pytest.approx(0.5, abs=0.12)
    assert large / medium == pytest.approx(0.5, abs=0.12)


def random_system(seed: int) -> tuple:
    """Seeded random panel of 2 or 3 mixed Gaussian columns and a lag order up to 3"""

    rng = generator(seed)
    k = int(rng.integers(2, 4))
    length = int(rng.integers(60, 300))
    values = rng.standard_normal((length, k)) @ (np.eye(k) + 0.5 * rng.standard_normal((k, k)))
    spec = VarSpec(SYSTEM[:k], int(rng.integers(1, 4)))

    return panel(values, columns=SYSTEM[:k]), spec, rng


@pytest.mark.parametrize("seed", range(200))
def test_fit_residuals_orthogonal_and_r_squared_bounded(seed):

    data, spec, _ = random_system(seed)

    fit = fit_var(data, spec)
    _, design = build_design(data, spec)

    scale = np.abs(design).sum(axis=0)[:, None] * np.abs(fit.residuals).max()
    assert np.all(np.abs(design.T @ fit.residuals) <= 1e-9 * scale + 1e-9)
    for stats in fit.equation_stats:
        assert 0.0 <= stats.r_squared <= 1.0
        assert stats.adj_r_squared <= stats.r_squared


@pytest.mark.parametrize("seed", range(200))
def test_fit_is_scale_equivariant(seed):

    data, spec, rng = random_system(10000 + seed)
    scales = 10.0 ** rng.uniform(-2.0, 2.0, size=spec.k)

    original = fit_var(data, spec)
    scaled = fit_var(panel(data.values * scales, columns=data.columns), spec)

    # a lag of variable l in equation i scales by s_i / s_l
    ratio = scales[:, None] / scales[None, :]
    assert np.allclose(scaled.lag_matrices() / ratio, original.lag_matrices(),
                       rtol=1e-6, atol=1e-9)
    assert np.allclose(scaled.intercept / scales, original.intercept, rtol=1e-6, atol=1e-9)
    assert np.allclose(scaled.t_statistics, original.t_statistics, rtol=1e-6, atol=1e-6)
    for before, after in zip(original.equation_stats, scaled.equation_stats):
        assert after.r_squared == pytest.approx(before.r_squared, rel=1e-8, abs=1e-10)
        assert after.f_statistic == pytest.approx(before.f_statistic, rel=1e-5)


def test_significance_count():

    spec = VarSpec(SYSTEM, 5)
    fits = [fake_fit(spec, t_statistics=np.full((3, 16), 10.0), entity_id=f"E{index}")
            for index in range(9)]
    fits += [fake_fit(spec, t_statistics=np.full((3, 16), 0.5), entity_id=f"F{index}")
             for index in range(4)]

    counts = significance_count(fits)

    assert counts.shape == (3, 16)
    assert np.all(counts == 9)
    # 2.2 clears the 5% critical value on 84 dof but not the 1% one
    borderline = [fake_fit(spec, t_statistics=np.full((3, 16), 2.2))]
    assert np.all(significance_count(borderline, 0.05) == 1)
    assert np.all(significance_count(borderline, 0.01) == 0)


@pytest.mark.montecarlo
def test_significance_count_on_thirteen_entity_batch():

    panels, _ = paper_shaped_batch(seed=20070208)
    spec = VarSpec(MARKET_COLUMNS, 5)

    counts = significance_count([fit_var(data, spec) for data in panels.values()])

    rs, dbond, dcds = range(3)
    # RS feeds DCDS for 11 entities, DCDS feeds DBOND for 8, nothing feeds RS
    assert 11 <= counts[dcds, spec.lag_columns("RS")[0]] <= 13
    assert 8 <= counts[dbond, spec.lag_columns("DCDS")[0]] <= 10
    assert counts[rs, spec.lag_columns("DCDS")[0]] <= 3
    assert counts[rs, spec.lag_columns("DBOND")[0]] <= 3


def test_aggregate_fits():

    spec = VarSpec(("X1", "X2"), 1)
    first = fake_fit(spec, coefficients=[[1.0, 2.0, 3.0], [4.0, 5.0, 6.0]], entity_id="A")
    second = fake_fit(spec, coefficients=[[3.0, 2.0, 1.0], [0.0, 1.0, 2.0]], entity_id="B")

    aggregate = aggregate_fits([first, second])

    assert np.allclose(aggregate.coefficients, [[2.0, 2.0, 2.0], [2.0, 3.0, 4.0]])
    assert aggregate.entity_ids == ("A", "B")
    assert aggregate.equation_stats[0]["r_squared"] == pytest.approx(0.1)
    assert aggregate.n_eff == 100.0
    assert np.allclose(aggregate_fits([second, first]).coefficients, aggregate.coefficients)
    assert np.array_equal(aggregate_fits([first]).coefficients, first.coefficients)


def test_aggregate_errors():

    with pytest.raises(EmptyList):
        aggregate_fits([])

    with pytest.raises(HeterogeneousSpecs):
        aggregate_fits([fake_fit(VarSpec(("X1", "X2"), 1)), fake_fit(VarSpec(("X1", "X2"), 2))])

    with pytest.raises(HeterogeneousSpecs):
        significance_count([fake_fit(VarSpec(("X1", "X2"), 1)),
                            fake_fit(VarSpec(("X2", "X1"), 1))])


def test_subperiod_windows():

    spec = VarSpec(SYSTEM, 5, sample_window=(None, "2007-02-08"))

    windows = subperiod_windows(spec, ["2004-01-01"])

    assert windows == [
        (None, datetime.date(2004, 1, 1)),
        (datetime.date(2004, 1, 1), datetime.date(2007, 2, 8)),
    ]
    assert subperiod_windows(spec, []) == [(None, datetime.date(2007, 2, 8))]
    assert subperiod_windows(VarSpec(SYSTEM, 5), ["2005-01-01", "2003-01-01"]) == [
        (None, datetime.date(2003, 1, 1)),
        (datetime.date(2003, 1, 1), datetime.date(2005, 1, 1)),
        (datetime.date(2005, 1, 1), None),
    ]


@pytest.mark.parametrize(
    "window, breakpoints",
    [
        ((None, "2007-02-08"), ["2008-01-01"]),
        ((None, "2007-02-08"), ["2007-02-08"]),
        (("2002-01-01", None), ["2001-06-01"]),
        ((None, None), ["2004-01-01", "2004-01-01"]),
    ],
)
def test_subperiod_windows_rejects_breakpoints(window, breakpoints):

    with pytest.raises(InvalidOptionError):
        subperiod_windows(VarSpec(SYSTEM, 5, sample_window=window), breakpoints)


def test_subperiod_fits():

    data = noise_panel(6, 300, columns=SYSTEM, start="2003-06-02")

    before, after = subperiod_fits(data, VarSpec(SYSTEM, 5), ["2004-01-01"])

    assert before.sample_span()[1] < datetime.date(2004, 1, 1)
    assert after.sample_span()[0] >= datetime.date(2004, 1, 1)
    assert before.n_eff + after.n_eff == 300 - 10
    # a window shape does not stop aggregation
    assert aggregate_fits([before, after]).coefficients.shape == (3, 16)


def test_lag_sum():

    spec = VarSpec(("RS", "DCDS"), 2)
    fit = fake_fit(spec, coefficients=[[0.0, 0.1, 0.2, 0.0, 0.0],
                                       [1.0, -40.0, -25.0, 0.05, 0.01]])

    assert lag_sum(fit, "RS", "DCDS") == pytest.approx(-65.0)
    assert lag_sum(fit, "DCDS", "RS") == pytest.approx(0.0)


def test_hypothesis_summary():

    spec = VarSpec(("RS", "DCDS"), 1)
    fits = {
        entity_id: fake_fit(spec, coefficients=[[0.0, 0.0, 0.0], [0.0, value, 0.0]],
                            entity_id=entity_id)
        for entity_id, value in (("A", -10.0), ("B", -20.0), ("C", 5.0))
    }
    grid = CausalityGrid(
        model="VAR2",
        directions=(("RS", "DCDS"),),
        results={entity_id: {("RS", "DCDS"): GrangerResult("RS", "DCDS", 5.0, 0.01, (1, 90))}
                 for entity_id in fits},
    )

    summary = hypothesis_summary(fits, grid, {"A": 2.0, "B": 3.0, "C": 1.0})

    assert summary["H1"]["DCDS"] == {
        "mean_rs_lag_sum": pytest.approx(-25.0 / 3.0),
        "negative_entities": 2,
        "entities": 3,
    }
    assert "DBOND" not in summary["H1"]
    assert "H2" not in summary
    assert summary["H3"]["RS cause DCDS"] == 3
    assert summary["H3"]["RS cause DBOND"] is None
    # |sums| 10, 20, 5 rank with caps 2, 3, 1
    assert summary["H5"]["spearman"] == pytest.approx(1.0)

    with pytest.raises(EmptyList):
        hypothesis_summary({}, grid, {})
