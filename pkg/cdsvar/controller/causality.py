# -*- coding: utf-8 -*-

"""
cdsvar.controller.causality
~~~~~~~~~~~~~~~~~~~~~~~~~~~

This module implements the Granger block-exclusion tests, the causality grids and their
summaries, and the Cholesky-orthogonalized impulse responses with their market
capitalization weighted aggregate.

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

# Package imports
from itertools import combinations

import numpy as np
import scipy.linalg
import statsmodels.api as sm
from scipy import stats
from statsmodels.tsa.vector_ar.var_model import ma_rep

# Local imports

# # Configs
from cdsvar.config.stats import StatsDefaults

# # Exception Handling
from cdsvar.models.exceptions import (
    EmptyList,
    InvalidOptionError,
    MismatchedShapes,
    NonPositiveCap,
    NotPositiveDefinite,
    RankDeficientDesign,
    SingularCovariance,
)

# # Class Representation
from cdsvar.models.logger import Logger
from cdsvar.models.results import CausalityGrid, GrangerResult, IrfResult
from cdsvar.models.series import AlignedPanel
from cdsvar.models.var import VarFit, VarSpec

# # Business logic
from cdsvar.controller.var import lagged_design, sample_panel

logger = Logger.setup_logger(name="cdsvar.controller.causality")


def _check_direction(spec: VarSpec, cause: str, effect: str) -> None:
    if cause == effect:
        raise InvalidOptionError(param="cause", value=cause, options=["a variable != effect"])

    for name in (cause, effect):
        if name not in spec.variables:
            raise InvalidOptionError(param="variable", value=name, options=list(spec.variables))


def _granger(response, design, spec, cause, effect, significance) -> GrangerResult:
    """Restricted against unrestricted SSR of the effect equation on one sample"""

    y = response[:, spec.variables.index(effect)]
    excluded = spec.lag_columns(cause)
    kept = [column for column in range(design.shape[1]) if column not in excluded]

    unrestricted = sm.OLS(y, design).fit()
    restricted = sm.OLS(y, design[:, kept]).fit()

    numerator_dof = len(excluded)
    denominator_dof = design.shape[0] - design.shape[1]

    ssr_u, ssr_r = float(unrestricted.ssr), float(restricted.ssr)

    # sums of squares at rounding level of the response count as exact fits
    exact = 1e-20 * max(float(y @ y), np.finfo(float).tiny)
    if ssr_r <= exact:
        f_statistic = 0.0
    elif ssr_u <= exact:
        f_statistic = np.inf
    else:
        f_statistic = max(((ssr_r - ssr_u) / numerator_dof) / (ssr_u / denominator_dof), 0.0)

    return GrangerResult(
        cause=cause,
        effect=effect,
        f_statistic=f_statistic,
        p_value=float(stats.f.sf(f_statistic, numerator_dof, denominator_dof)),
        dof=(numerator_dof, denominator_dof),
        significance=significance,
    )


def _design(panel: AlignedPanel, spec: VarSpec) -> tuple:
    response, design = lagged_design(sample_panel(panel, spec).values, spec)

    rank = int(np.linalg.matrix_rank(design))
    if rank < design.shape[1]:
        raise RankDeficientDesign(rank=rank, columns=design.shape[1])

    return response, design


def granger_test(
    panel: AlignedPanel, spec: VarSpec, cause: str, effect: str, significance: float = 0.05
) -> GrangerResult:
    """Granger test of ``cause`` on ``effect``

    ``F = [(SSR_r - SSR_u) / p] / [SSR_u / (T_eff - m)]`` where the restricted effect
    equation drops every lag of ``cause``; both equations use the same rows.

    :param panel: The entity panel
    :type panel: AlignedPanel

    :param spec: The VAR specification, the lag order of the test
    :type spec: VarSpec

    '''
    :raise InvalidOptionError: cause == effect, or a name outside the VarSpec
    :raise InsufficientSample: Too few rows
    :raise RankDeficientDesign: Regressor matrix not of full column rank
    '''

    :return: The test outcome
    :rtype: GrangerResult

    Usage::
        >>> granger_test(panel, VarSpec(("RS", "DCDS"), 5), cause="RS", effect="DCDS").rejected
        True
    """

    _check_direction(spec, cause, effect)
    response, design = _design(panel, spec)

    return _granger(response, design, spec, cause, effect, significance)


def granger_wald(fit: VarFit, cause: str, effect: str, significance: float = 0.05) -> GrangerResult:
    """Wald form of the block-exclusion test from the unrestricted coefficient covariance

    ``W = b' [s^2 (X'X)^-1]_RR^-1 b / p``, equal to the SSR form on a full rank design.
    """

    _check_direction(fit.spec, cause, effect)

    row = fit.spec.variables.index(effect)
    excluded = fit.spec.lag_columns(cause)
    beta = fit.coefficients[row, excluded]
    s2 = fit.equation_stats[row].ssr / fit.df_resid
    covariance = s2 * fit.xtx_inverse[np.ix_(excluded, excluded)]

    f_statistic = float(beta @ np.linalg.solve(covariance, beta)) / len(excluded)

    return GrangerResult(
        cause=cause,
        effect=effect,
        f_statistic=f_statistic,
        p_value=float(stats.f.sf(f_statistic, len(excluded), fit.df_resid)),
        dof=(len(excluded), fit.df_resid),
        significance=significance,
    )


def directions(variables: list) -> list:
    """Ordered ``(cause, effect)`` pairs: for each variable pair, the reverse direction first"""

    pairs = []
    for first, second in combinations(variables, 2):
        pairs.extend([(second, first), (first, second)])

    return pairs


def causality_table(
    panels: dict, spec: VarSpec, model: str = "VAR", significance: float = 0.05
) -> CausalityGrid:
    """Granger decisions of every entity in every direction

    :param panels: ``{entity_id: AlignedPanel}``
    :type panels: dict

    :param spec: The VAR specification shared by all entities
    :type spec: VarSpec

    :return: The grid; 6 directions for 3 variables, 2 for 2
    :rtype: CausalityGrid
    """

    pairs = directions(list(spec.variables))
    results = {}

    for entity_id, panel in panels.items():
        response, design = _design(panel, spec)
        results[entity_id] = {
            (cause, effect): _granger(response, design, spec, cause, effect, significance)
            for cause, effect in pairs
        }

    grid = CausalityGrid(model=model, directions=tuple(pairs), results=results)
    logger.info(
        f"{model}: Granger totals "
        + ", ".join(f"{cause} cause {effect} {count}"
                    for (cause, effect), count in grid.totals().items())
    )

    return grid


def bidirectional_counts(grid: CausalityGrid) -> dict:
    """Per variable pair, number of entities with causality in both directions"""

    counts = {}
    for second, first in grid.directions[::2]:
        counts[f"{first}<->{second}"] = sum(
            int(row[(first, second)].rejected and row[(second, first)].rejected)
            for row in grid.results.values()
        )

    return counts


def causality_comparison(grids: dict, pair: tuple = ("RS", "DCDS")) -> dict:
    """Both directions of one variable pair, per model and period

    :param grids: ``{(model, period): CausalityGrid}``
    :type grids: dict

    :return: ``{model: {period: {"RS cause DCDS": n, "DCDS cause RS": n}}}``
    :rtype: dict
    """

    first, second = pair
    comparison = {}

    for (model, period), grid in grids.items():
        totals = grid.totals()
        if (first, second) not in totals:
            continue
        comparison.setdefault(model, {})[period] = {
            f"{first} cause {second}": totals[(first, second)],
            f"{second} cause {first}": totals[(second, first)],
        }

    return comparison


def cholesky(matrix: np.ndarray) -> np.ndarray:
    """Lower triangular L with L L' = matrix

    '''
    :raise NotPositiveDefinite: Asymmetric beyond 1e-10 or not positive definite
    '''

    Usage::
        >>> cholesky(np.array([[4.0, 2.0], [2.0, 5.0]]))
        array([[2., 0.],
               [1., 2.]])
    """

    matrix = np.asarray(matrix, dtype=float)

    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise NotPositiveDefinite(f"matrix shaped {matrix.shape} is not square")

    if np.max(np.abs(matrix - matrix.T), initial=0.0) > StatsDefaults.symmetry_tolerance:
        raise NotPositiveDefinite("matrix is not symmetric")

    try:
        factor = scipy.linalg.cholesky((matrix + matrix.T) / 2.0, lower=True)
    except scipy.linalg.LinAlgError as exception:
        raise NotPositiveDefinite(str(exception))

    if not np.all(np.diag(factor) > 0):
        raise NotPositiveDefinite("non-positive pivot")

    return factor


def ma_matrices(fit: VarFit, horizon: int = 15) -> np.ndarray:
    """Moving-average matrices Phi_0..Phi_H of the estimated VAR, in spec order"""

    return ma_rep(fit.lag_matrices(), maxn=horizon)


def impulse_response(fit: VarFit, horizon: int = 15, ordering: list = None) -> IrfResult:
    """Orthogonalized impulse responses ``Phi_h L`` over horizons 0..H

    L is the Cholesky factor of the residual covariance with the variables taken in
    ``ordering`` (the VarSpec order by default), and every axis of the result follows that
    ordering, so ``responses[0]`` is L itself.

    :param fit: The estimated VAR
    :type fit: VarFit

    :param horizon: Last horizon H
    :type horizon: int

    :param ordering: Cholesky ordering, a permutation of the VarSpec variables
    :type ordering: list

    '''
    :raise SingularCovariance: Residual covariance not positive definite
    '''

    :return: The responses
    :rtype: IrfResult
    """

    variables = list(fit.spec.variables)
    ordering = variables if ordering is None else list(ordering)

    if sorted(ordering) != sorted(variables):
        raise InvalidOptionError(param="ordering", value=ordering,
                                 options=[f"a permutation of {variables}"])

    permutation = [variables.index(name) for name in ordering]
    covariance = fit.residual_covariance[np.ix_(permutation, permutation)]

    try:
        factor = cholesky(covariance)
    except NotPositiveDefinite as exception:
        raise SingularCovariance(exception.reason)

    phi = ma_matrices(fit, horizon)[:, permutation][:, :, permutation]

    return IrfResult(
        horizon=horizon,
        ordering=tuple(ordering),
        responses=phi @ factor,
        shock_scale=np.diag(factor),
    )


def cap_weights(market_caps: list) -> np.ndarray:
    """Weights cap_i / sum(caps)

    '''
    :raise NonPositiveCap: A capitalization <= 0
    '''
    """

    caps = np.asarray(market_caps, dtype=float)
    for cap in caps:
        if not cap > 0:
            raise NonPositiveCap(cap)

    return caps / caps.sum()


def cap_weighted_irf(results: list) -> IrfResult:
    """Market capitalization weighted mean of impulse responses

    :param results: ``(IrfResult, market_cap)`` pairs
    :type results: list

    '''
    :raise EmptyList: No result
    :raise MismatchedShapes: Different horizons, orderings or sizes
    :raise NonPositiveCap: A capitalization <= 0
    '''

    :return: The weighted responses
    :rtype: IrfResult
    """

    if not results:
        raise EmptyList(operation="cap_weighted_irf")

    expected = results[0][0].shape_key()
    for irf, _ in results[1:]:
        if irf.shape_key() != expected:
            raise MismatchedShapes(expected=expected, found=irf.shape_key())

    weights = cap_weights([cap for _, cap in results])
    responses = np.tensordot(weights, np.stack([irf.responses for irf, _ in results]), axes=1)
    scales = weights @ np.stack([irf.shock_scale for irf, _ in results])

    return IrfResult(
        horizon=results[0][0].horizon,
        ordering=results[0][0].ordering,
        responses=responses,
        shock_scale=scales,
    )


def cumulative_response(irf: IrfResult) -> IrfResult:
    """Running sum of the responses over horizons, the effect on the undifferenced levels"""

    return IrfResult(
        horizon=irf.horizon,
        ordering=irf.ordering,
        responses=np.cumsum(irf.responses, axis=0),
        shock_scale=irf.shock_scale,
    )
