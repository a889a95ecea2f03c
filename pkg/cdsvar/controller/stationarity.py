# -*- coding: utf-8 -*-

"""
cdsvar.controller.stationarity
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

This module implements the unit-root and stationarity tests run on every analysis
variable: the augmented Dickey-Fuller test, the Phillips-Perron Z-tau test and the KPSS
test, plus the per-panel battery and the cross-entity rejection counts.

ADF and PP test the unit-root null and reject in the left tail; KPSS tests the
stationarity null and rejects in the right tail.

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

# Package imports
import math
import warnings

import numpy as np
import statsmodels.api as sm
from statsmodels.tools.sm_exceptions import InterpolationWarning
from statsmodels.tsa.adfvalues import mackinnoncrit, mackinnonp
from statsmodels.tsa.stattools import acovf, adfuller, kpss

# Local imports

# # Configs
from cdsvar.config.stats import StatsDefaults

# # Exception Handling
from cdsvar.models.exceptions import (
    DegenerateRegression,
    EmptyList,
    NonPositiveLongRunVariance,
    TooShort,
)

# # Class Representation
from cdsvar.models.logger import Logger
from cdsvar.models.results import Deterministic, TestKind, UnitRootReport
from cdsvar.models.series import AlignedPanel, ObservationSeries

logger = Logger.setup_logger(name="cdsvar.controller.stationarity")

# KPSS asymptotic critical values, Kwiatkowski, Phillips, Schmidt and Shin (1992), Table 1
KPSS_CRITICAL_VALUES = {
    Deterministic.ConstantOnly: {"1%": 0.739, "5%": 0.463, "10%": 0.347},
    Deterministic.ConstantAndTrend: {"1%": 0.216, "5%": 0.146, "10%": 0.119},
}


def _values(series, operation: str) -> np.ndarray:
    """Vector of a series, checked against the minimum test length"""

    if isinstance(series, ObservationSeries):
        values = np.asarray(series.values, dtype=float)
    else:
        values = np.asarray(series, dtype=float).reshape(-1)

    if values.shape[0] < StatsDefaults.unit_root_min_obs:
        raise TooShort(operation=operation, length=values.shape[0],
                       required=StatsDefaults.unit_root_min_obs)

    return values


def newey_west_bandwidth(residuals: np.ndarray) -> int:
    """Automatic Bartlett bandwidth of Newey and West (1994)

    :param residuals: Zero-mean residuals
    :type residuals: numpy.ndarray

    :return: Truncation lag, at most T - 1
    :rtype: int
    """

    nobs = residuals.shape[0]
    pilot = min(StatsDefaults.newey_west_pilot_lag(nobs), nobs - 1)
    gammas = acovf(residuals, adjusted=False, demean=False, fft=False, nlag=pilot)

    s0 = gammas[0] + 2.0 * np.sum(gammas[1:])
    s1 = 2.0 * np.sum(np.arange(1, pilot + 1) * gammas[1:])

    if s0 <= 0:
        return 0

    gamma = 1.1447 * ((s1 / s0) ** 2) ** (1.0 / 3.0)
    return int(min(math.floor(gamma * nobs ** (1.0 / 3.0)), nobs - 1))


def long_run_variance(residuals: np.ndarray, bandwidth: int) -> float:
    """Bartlett-weighted long-run variance of zero-mean residuals"""

    gammas = acovf(residuals, adjusted=False, demean=False, fft=False, nlag=bandwidth)
    weights = 1.0 - np.arange(1, bandwidth + 1) / (bandwidth + 1.0)

    return float(gammas[0] + 2.0 * np.sum(weights * gammas[1:]))


def adf_test(
    series, deterministic: Deterministic = Deterministic.ConstantOnly, max_lag: int = None
) -> UnitRootReport:
    """Augmented Dickey-Fuller test

    When ``max_lag`` is unset the augmentation lag minimizes the Schwarz criterion over
    0..floor(12 (T/100)^(1/4)); when set it is used as is.

    :param series: An ObservationSeries or a vector
    :param deterministic: Deterministic terms of the test regression
    :param max_lag: Fixed augmentation lag

    '''
    :raise TooShort: Fewer than 25 observations
    :raise DegenerateRegression: Constant or collinear input
    '''

    :return: The report, critical values from MacKinnon (2010)
    :rtype: UnitRootReport

    Usage::
        >>> adf_test(noise).reject_at_5pct
        True
    """

    values = _values(series, "adf_test")
    deterministic = Deterministic(deterministic)

    if np.ptp(values) == 0:
        raise DegenerateRegression(test="ADF", reason="the series is constant")

    if max_lag is None:
        lags, autolag = StatsDefaults.adf_max_lag(values.shape[0]), "BIC"
    else:
        lags, autolag = int(max_lag), None

    try:
        statistic, p_value, used_lag, nobs, critical_values, *_ = adfuller(
            values, maxlag=lags, regression=deterministic.regression, autolag=autolag
        )
    except (ValueError, np.linalg.LinAlgError) as exception:
        raise DegenerateRegression(test="ADF", reason=str(exception))

    if not np.isfinite(statistic):
        raise DegenerateRegression(test="ADF", reason=f"statistic {statistic}")

    logger.debug(f"ADF: lag {used_lag} on {nobs} observations, statistic {statistic:.4f}")

    return UnitRootReport(
        test_kind=TestKind.ADF,
        statistic=statistic,
        critical_values=critical_values,
        nuisance={"lags": int(used_lag), "deterministic": deterministic.value},
        p_value=p_value,
    )


def pp_test(
    series, deterministic: Deterministic = Deterministic.ConstantOnly, bandwidth: int = None
) -> UnitRootReport:
    """Phillips-Perron Z-tau test

    The Dickey-Fuller regression ``y_t = a (+ d t) + rho y_{t-1} + u_t`` is corrected with
    a Bartlett long-run variance of its residuals, bandwidth chosen automatically unless
    given.

    '''
    :raise TooShort: Fewer than 25 observations
    :raise DegenerateRegression: Constant or collinear input
    :raise NonPositiveLongRunVariance: Long-run variance <= 0
    '''

    :return: The report, critical values and p-value from MacKinnon (2010)
    :rtype: UnitRootReport
    """

    values = _values(series, "pp_test")
    deterministic = Deterministic(deterministic)

    lagged = values[:-1]
    response = values[1:]
    nobs = response.shape[0]

    columns = [np.ones(nobs), lagged]
    if deterministic == Deterministic.ConstantAndTrend:
        columns.insert(1, np.arange(1.0, nobs + 1.0))
    design = np.column_stack(columns)

    if np.linalg.matrix_rank(design) < design.shape[1]:
        raise DegenerateRegression(test="PhillipsPerron", reason="collinear regressors")

    fit = sm.OLS(response, design).fit()
    residuals = np.asarray(fit.resid)
    rho = fit.params[-1]
    sigma = fit.bse[-1]

    gamma0 = float(residuals.dot(residuals) / nobs)
    s = math.sqrt(residuals.dot(residuals) / (nobs - design.shape[1]))

    if bandwidth is None:
        bandwidth = newey_west_bandwidth(residuals)
    lam2 = long_run_variance(residuals, int(bandwidth))

    if not lam2 > 0:
        raise NonPositiveLongRunVariance(lam2)

    lam = math.sqrt(lam2)
    statistic = (
        math.sqrt(gamma0 / lam2) * ((rho - 1.0) / sigma)
        - 0.5 * ((lam2 - gamma0) / lam) * (nobs * sigma / s)
    )

    critical = mackinnoncrit(N=1, regression=deterministic.regression, nobs=nobs)
    logger.debug(f"PP: bandwidth {bandwidth} on {nobs} observations, Z-tau {statistic:.4f}")

    return UnitRootReport(
        test_kind=TestKind.PhillipsPerron,
        statistic=statistic,
        critical_values={"1%": critical[0], "5%": critical[1], "10%": critical[2]},
        nuisance={"bandwidth": int(bandwidth), "deterministic": deterministic.value},
        p_value=mackinnonp(statistic, regression=deterministic.regression, N=1),
    )


def kpss_test(
    series, deterministic: Deterministic = Deterministic.ConstantOnly, bandwidth: int = None
) -> UnitRootReport:
    """KPSS test of the stationarity null

    ``reject_at_5pct`` means the series is found non-stationary. A constant series has
    zero partial sums and scores 0.

    '''
    :raise TooShort: Fewer than 25 observations
    '''

    :return: The report
    :rtype: UnitRootReport
    """

    values = _values(series, "kpss_test")
    deterministic = Deterministic(deterministic)
    critical_values = KPSS_CRITICAL_VALUES[deterministic]

    if np.ptp(values) == 0:
        return UnitRootReport(
            test_kind=TestKind.KPSS,
            statistic=0.0,
            critical_values=critical_values,
            nuisance={"bandwidth": 0, "deterministic": deterministic.value},
            p_value=0.1,
        )

    if bandwidth is None:
        if deterministic == Deterministic.ConstantOnly:
            residuals = values - values.mean()
        else:
            trend = sm.add_constant(np.arange(1.0, values.shape[0] + 1.0))
            residuals = np.asarray(sm.OLS(values, trend).fit().resid)
        bandwidth = newey_west_bandwidth(residuals)

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", InterpolationWarning)
        statistic, p_value, lags, _ = kpss(
            values, regression=deterministic.regression, nlags=int(bandwidth)
        )

    logger.debug(f"KPSS: bandwidth {lags}, statistic {statistic:.4f}")

    return UnitRootReport(
        test_kind=TestKind.KPSS,
        statistic=statistic,
        critical_values=critical_values,
        nuisance={"bandwidth": int(lags), "deterministic": deterministic.value},
        p_value=p_value,
    )


def stationarity_battery(
    panel: AlignedPanel, deterministic: Deterministic = Deterministic.ConstantOnly
) -> dict:
    """ADF, PP and KPSS on every panel column

    :return: ``{variable: (adf, pp, kpss)}`` in column order, 3k reports in total
    :rtype: dict
    """

    if panel.n_obs == 0:
        raise TooShort(operation="stationarity_battery", length=0,
                       required=StatsDefaults.unit_root_min_obs)

    return series_battery(
        {name: panel.column(name) for name in panel.columns}, deterministic
    )


def series_battery(series: dict, deterministic: Deterministic = Deterministic.ConstantOnly) -> dict:
    """The three tests on each series of a ``{name: series}`` mapping, e.g. the levels"""

    return {
        name: (
            adf_test(values, deterministic),
            pp_test(values, deterministic),
            kpss_test(values, deterministic),
        )
        for name, values in series.items()
    }


def stationarity_counts(batteries: list) -> dict:
    """Number of entities whose null is rejected, per variable and test

    :param batteries: One ``stationarity_battery`` result per entity
    :type batteries: list

    :return: ``{variable: {test: {"reject5": n, "reject1": n, "tested": n}}}``
    :rtype: dict
    """

    if not batteries:
        raise EmptyList(operation="stationarity_counts")

    counts = {}
    for battery in batteries:
        for variable, reports in battery.items():
            cells = counts.setdefault(variable, {})
            for report in reports:
                cell = cells.setdefault(
                    report.test_kind.value, {"reject5": 0, "reject1": 0, "tested": 0}
                )
                cell["reject5"] += int(report.reject_at_5pct)
                cell["reject1"] += int(report.reject_at_1pct)
                cell["tested"] += 1

    return counts
