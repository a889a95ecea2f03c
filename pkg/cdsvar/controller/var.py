# -*- coding: utf-8 -*-

"""
cdsvar.controller.var
~~~~~~~~~~~~~~~~~~~~~

This module implements the difference-VAR engine: the shared lagged design, the
equation-wise least squares fit with its per-equation statistics, the cross-entity
aggregation (mean coefficients, mean t-statistics, significance counts), the sub-period
fits and the evidence gathered for the study hypotheses.

Information criteria are per equation and divided by T_eff:
``AIC = -2 l / T_eff + 2 m / T_eff`` and ``SC = -2 l / T_eff + m ln(T_eff) / T_eff``.

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

# Package imports
import math

import numpy as np
import pandas as pd
import statsmodels.api as sm
from scipy import stats

# Local imports

# # Exception Handling
from cdsvar.models.exceptions import (
    EmptyList,
    HeterogeneousSpecs,
    InsufficientSample,
    InvalidOptionError,
    RankDeficientDesign,
    ZeroVariance,
)

# # Class Representation
from cdsvar.models.logger import Logger
from cdsvar.models.series import AlignedPanel
from cdsvar.models.var import AggregatedFit, EquationStats, VarFit, VarSpec

logger = Logger.setup_logger(name="cdsvar.controller.var")


def sample_panel(panel: AlignedPanel, spec: VarSpec) -> AlignedPanel:
    """The VarSpec variables over its sample window, checked for size"""

    panel = panel.select(list(spec.variables))

    start, end = spec.sample_window
    if start is not None or end is not None:
        panel = panel.window(start, end)

    # hard floor: T_eff must exceed m
    required = max(spec.required_rows, spec.lag_order + spec.n_regressors + 1)
    if panel.n_obs < required:
        raise InsufficientSample(entity_id=panel.entity_id, rows=panel.n_obs, required=required)

    return panel


def lagged_design(values: np.ndarray, spec: VarSpec) -> tuple:
    """Response and regressor matrices of an already sized sample"""

    n_obs, p = values.shape[0], spec.lag_order

    columns = [np.ones(n_obs - p)] if spec.include_intercept else []
    for index in range(spec.k):
        for lag in range(1, p + 1):
            columns.append(values[p - lag:n_obs - lag, index])

    return values[p:, :].copy(), np.column_stack(columns)


def build_design(panel: AlignedPanel, spec: VarSpec) -> tuple:
    """Response and regressor matrices of a VAR(p)

    Rows are t = p..T-1 of the (windowed) panel; regressor columns are
    ``[1, var1(-1)..var1(-p), var2(-1)..var2(-p), ...]``.

    :param panel: The entity panel
    :type panel: AlignedPanel

    :param spec: The VAR specification
    :type spec: VarSpec

    '''
    :raise InsufficientSample: Fewer than k*p + p + min_extra_rows rows
    '''

    :return: ``(Y, X)``, T_eff x k and T_eff x m
    :rtype: tuple

    Usage::
        >>> response, design = build_design(panel, VarSpec(("RS", "DBOND", "DCDS"), 5))
        >>> design.shape
        (95, 16)
    """

    return lagged_design(sample_panel(panel, spec).values, spec)


def fit_var(panel: AlignedPanel, spec: VarSpec) -> VarFit:
    """Fits every equation of a VAR by ordinary least squares on the shared design

    t-statistics use the residual variance on T_eff - m degrees of freedom; the residual
    covariance used by the impulse responses divides by T_eff.

    :param panel: The entity panel
    :type panel: AlignedPanel

    :param spec: The VAR specification
    :type spec: VarSpec

    '''
    :raise InsufficientSample: Too few rows
    :raise RankDeficientDesign: Regressor matrix not of full column rank
    :raise ZeroVariance: A constant response
    '''

    :return: The fit
    :rtype: VarFit
    """

    sample = sample_panel(panel, spec)
    response, design = lagged_design(sample.values, spec)
    n_eff, m = design.shape

    rank = int(np.linalg.matrix_rank(design))
    if rank < m:
        raise RankDeficientDesign(rank=rank, columns=m)

    coefficients, standard_errors, t_statistics, residuals, equation_stats = [], [], [], [], []
    xtx_inverse = None

    for index, variable in enumerate(spec.variables):
        y = response[:, index]
        sst = float(np.sum((y - y.mean()) ** 2))
        if sst == 0:
            raise ZeroVariance(variable=variable)

        result = sm.OLS(y, design).fit()
        if xtx_inverse is None:
            xtx_inverse = result.normalized_cov_params

        ssr = float(result.ssr)
        with np.errstate(divide="ignore", invalid="ignore"):
            r_squared = 1.0 - ssr / sst
            adj_r_squared = 1.0 - (1.0 - r_squared) * (n_eff - 1) / (n_eff - m)
            slopes = m - int(spec.include_intercept)
            f_statistic = ((sst - ssr) / slopes) / (ssr / (n_eff - m))
            log_likelihood = float(result.llf)

        equation_stats.append(
            EquationStats(
                r_squared=r_squared,
                adj_r_squared=adj_r_squared,
                f_statistic=float(f_statistic),
                log_likelihood=log_likelihood,
                aic=-2.0 * log_likelihood / n_eff + 2.0 * m / n_eff,
                sc=-2.0 * log_likelihood / n_eff + m * math.log(n_eff) / n_eff,
                mean_dependent=float(y.mean()),
                sd_dependent=float(y.std(ddof=1)),
                ssr=ssr,
            )
        )
        coefficients.append(result.params)
        standard_errors.append(result.bse)
        t_statistics.append(result.tvalues)
        residuals.append(result.resid)

    residuals = np.column_stack(residuals)

    logger.debug(f"{panel.entity_id}: VAR({spec.lag_order}) on {n_eff} rows, m={m}")

    return VarFit(
        spec=spec,
        entity_id=panel.entity_id,
        dates=sample.dates[spec.lag_order:],
        coefficients=np.vstack(coefficients),
        standard_errors=np.vstack(standard_errors),
        t_statistics=np.vstack(t_statistics),
        residuals=residuals,
        equation_stats=tuple(equation_stats),
        residual_covariance=residuals.T @ residuals / n_eff,
        xtx_inverse=xtx_inverse,
        metadata={
            "T_eff": n_eff,
            "regressors": m,
            "information_criteria": "per equation, (-2 loglik + penalty) / T_eff",
            "t_statistic_dof": "T_eff - m",
            "residual_covariance_dof": "T_eff",
        },
    )


def _check_homogeneous(fits: list, operation: str) -> None:
    if not fits:
        raise EmptyList(operation=operation)

    expected = fits[0].spec.shape()
    for fit in fits[1:]:
        if fit.spec.shape() != expected:
            raise HeterogeneousSpecs(expected=expected, found=fit.spec.shape())


def significance_count(fits: list, level: float = 0.05) -> np.ndarray:
    """Per (equation, regressor) cell, number of fits whose two-sided t-test rejects

    Each fit is compared with the Student critical value on its own T_eff - m degrees of
    freedom.

    '''
    :raise HeterogeneousSpecs: Fits of different shapes
    :raise EmptyList: No fit
    '''

    :return: k x m integer matrix
    :rtype: numpy.ndarray
    """

    _check_homogeneous(fits, "significance_count")

    counts = np.zeros(fits[0].t_statistics.shape, dtype=int)
    for fit in fits:
        critical = stats.t.ppf(1.0 - level / 2.0, fit.df_resid)
        with np.errstate(invalid="ignore"):
            counts += (np.abs(fit.t_statistics) > critical).astype(int)

    return counts


def aggregate_fits(fits: list) -> AggregatedFit:
    """Element-wise means of coefficients, t-statistics and equation statistics

    '''
    :raise HeterogeneousSpecs: Fits of different shapes
    :raise EmptyList: No fit
    '''

    :return: The means
    :rtype: AggregatedFit
    """

    _check_homogeneous(fits, "aggregate_fits")

    equation_stats = tuple(
        {
            name: float(np.mean([getattr(fit.equation_stats[index], name) for fit in fits]))
            for name in EquationStats.names()
        }
        for index in range(fits[0].spec.k)
    )

    return AggregatedFit(
        spec=fits[0].spec,
        entity_ids=tuple(fit.entity_id for fit in fits),
        coefficients=np.mean([fit.coefficients for fit in fits], axis=0),
        t_statistics=np.mean([fit.t_statistics for fit in fits], axis=0),
        equation_stats=equation_stats,
        n_eff=float(np.mean([fit.n_eff for fit in fits])),
    )


def subperiod_windows(spec: VarSpec, breakpoints: list) -> list:
    """``(start, end)`` windows partitioning the VarSpec window at the breakpoints

    '''
    :raise InvalidOptionError: Repeated breakpoints, or one on or outside a bound of the
        VarSpec window
    '''
    """

    start, end = spec.sample_window
    edges = sorted(pd.Timestamp(value).date() for value in breakpoints)

    for previous, edge in zip([None] + edges, edges):
        if (
            edge == previous
            or (start is not None and edge <= start)
            or (end is not None and edge >= end)
        ):
            raise InvalidOptionError(
                param="breakpoints",
                value=edge.isoformat(),
                options=[f"distinct dates strictly inside [{start}, {end})"],
            )

    bounds = [start] + edges + [end]
    return list(zip(bounds[:-1], bounds[1:]))


def subperiod_fits(panel: AlignedPanel, spec: VarSpec, breakpoints: list) -> list:
    """Independent fits on the windows cut at each breakpoint

    Each later window starts on its breakpoint; an empty breakpoint list gives one fit on
    the VarSpec window.

    '''
    :raise InsufficientSample: A window too short to fit
    :raise InvalidOptionError: A breakpoint outside the VarSpec window
    '''

    :return: One VarFit per window, in date order
    :rtype: list
    """

    return [
        fit_var(panel, spec.with_window(start, end))
        for start, end in subperiod_windows(spec, breakpoints)
    ]


def lag_sum(fit: VarFit, cause: str, effect: str) -> float:
    """Sum of the coefficients of the lags of ``cause`` in the ``effect`` equation"""

    row = fit.spec.variables.index(effect)
    return float(np.sum(fit.coefficients[row, fit.spec.lag_columns(cause)]))


def hypothesis_summary(fits: dict, grid, market_caps: dict) -> dict:
    """Evidence for the hypotheses of the study

    * H1, a share return rise lowers spreads: sign of the mean summed RS lags in each
      spread equation, and the number of entities where that sum is negative.
    * H2, the CDS market leads the bond market: DCDS to DBOND versus DBOND to DCDS
      Granger counts.
    * H3, shares lead CDS more than bonds: RS to DCDS versus RS to DBOND counts.
    * H5, larger firms react more: Spearman rank correlation between market
      capitalization and the absolute summed RS lags in the DCDS equation.

    :param fits: ``{entity_id: VarFit}`` of one model and period
    :type fits: dict

    :param grid: The CausalityGrid of the same model and period
    :type grid: CausalityGrid

    :param market_caps: ``{entity_id: market_cap}``
    :type market_caps: dict

    :return: A JSON-ready mapping keyed ``H1``, ``H2``, ``H3``, ``H5``
    :rtype: dict
    """

    if not fits:
        raise EmptyList(operation="hypothesis_summary")

    variables = next(iter(fits.values())).spec.variables
    totals = {f"{cause} cause {effect}": count for (cause, effect), count
              in grid.totals().items()}
    summary = {}

    h1 = {}
    for effect in ("DBOND", "DCDS"):
        if effect in variables and "RS" in variables:
            sums = [lag_sum(fit, "RS", effect) for fit in fits.values()]
            h1[effect] = {
                "mean_rs_lag_sum": float(np.mean(sums)),
                "negative_entities": int(sum(value < 0 for value in sums)),
                "entities": len(sums),
            }
    summary["H1"] = h1

    if "DBOND" in variables and "DCDS" in variables:
        summary["H2"] = {
            "DCDS cause DBOND": totals.get("DCDS cause DBOND", 0),
            "DBOND cause DCDS": totals.get("DBOND cause DCDS", 0),
        }

    if "RS" in variables and "DCDS" in variables:
        summary["H3"] = {
            "RS cause DCDS": totals.get("RS cause DCDS", 0),
            "RS cause DBOND": totals.get("RS cause DBOND", None),
        }

        entity_ids = [entity_id for entity_id in fits if entity_id in market_caps]
        if len(entity_ids) >= 3:
            caps = [market_caps[entity_id] for entity_id in entity_ids]
            reactions = [abs(lag_sum(fits[entity_id], "RS", "DCDS")) for entity_id in entity_ids]
            correlation, p_value = stats.spearmanr(caps, reactions)
            summary["H5"] = {
                "spearman": float(correlation),
                "p_value": float(p_value),
                "entities": len(entity_ids),
            }

    return summary
