# -*- coding: utf-8 -*-

"""
cdsvar.models.var
~~~~~~~~~~~~~~~~~

This module contains the class representations of a difference-VAR specification and of
its equation-wise least squares fit.

Coefficient matrices are laid out one row per equation, one column per regressor, in the
regressor order ``[Const, var1(-1) .. var1(-p), var2(-1) .. var2(-p), ...]``.

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

# Package imports
import datetime
from dataclasses import dataclass, field

import numpy as np
import pandas as pd

# Local imports

# # Exception Handling
from cdsvar.models.exceptions import InvalidOptionError


@dataclass(frozen=True)
class VarSpec:
    """Specification of a VAR system

    :param variables: Ordered variable names, also the Cholesky ordering
    :type variables: tuple

    :param lag_order: Number of lags p, >= 1
    :type lag_order: int

    :param sample_window: Optional ``(start, end)`` dates, end exclusive
    :type sample_window: tuple

    :param include_intercept: Whether each equation carries a constant
    :type include_intercept: bool

    :param min_extra_rows: Rows required beyond ``k*p + p`` before a fit is attempted
    :type min_extra_rows: int

    Usage::
        >>> from cdsvar.models.var import VarSpec
        >>> VarSpec(variables=("RS", "DBOND", "DCDS"), lag_order=5).n_regressors
        16
    """

    variables: tuple
    lag_order: int = 5
    sample_window: tuple = (None, None)
    include_intercept: bool = True
    min_extra_rows: int = 10

    def __post_init__(self) -> None:
        variables = tuple(str(variable) for variable in self.variables)

        if len(variables) == 0 or len(set(variables)) != len(variables):
            raise InvalidOptionError(
                param="variables", value=variables, options=["distinct variable names"]
            )

        if int(self.lag_order) != self.lag_order or self.lag_order < 1:
            raise InvalidOptionError(
                param="lag_order", value=self.lag_order, options=["integer >= 1"]
            )

        if self.min_extra_rows < 0:
            raise InvalidOptionError(
                param="min_extra_rows", value=self.min_extra_rows, options=["integer >= 0"]
            )

        start, end = self.sample_window
        start = None if start is None else pd.Timestamp(start).date()
        end = None if end is None else pd.Timestamp(end).date()
        if start is not None and end is not None and not start < end:
            raise InvalidOptionError(
                param="sample_window", value=f"{start} - {end}", options=["start < end"]
            )

        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "lag_order", int(self.lag_order))
        object.__setattr__(self, "sample_window", (start, end))

    @property
    def k(self) -> int:
        """Number of variables"""

        return len(self.variables)

    @property
    def n_regressors(self) -> int:
        """Regressors per equation, m = k*p (+1 with intercept)"""

        return self.k * self.lag_order + int(self.include_intercept)

    @property
    def required_rows(self) -> int:
        """Panel rows required by the degrees-of-freedom guard"""

        return self.k * self.lag_order + self.lag_order + self.min_extra_rows

    def regressor_names(self) -> list:
        """Names of the regressor columns, ``Const`` then ``VAR(-j)`` blocks"""

        names = ["Const"] if self.include_intercept else []
        for variable in self.variables:
            names.extend(f"{variable}(-{lag})" for lag in range(1, self.lag_order + 1))

        return names

    def lag_columns(self, variable: str) -> list:
        """Indices of the regressor columns holding the lags of ``variable``"""

        if variable not in self.variables:
            raise InvalidOptionError(
                param="variable", value=variable, options=list(self.variables)
            )

        offset = int(self.include_intercept)
        block = self.variables.index(variable)
        start = offset + block * self.lag_order
        return list(range(start, start + self.lag_order))

    def shape(self) -> tuple:
        """Shape key that aggregated fits must share"""

        return (self.variables, self.lag_order, self.include_intercept)

    def with_window(self, start=None, end=None) -> "VarSpec":
        """Returns a copy restricted to another sample window"""

        return VarSpec(
            variables=self.variables,
            lag_order=self.lag_order,
            sample_window=(start, end),
            include_intercept=self.include_intercept,
            min_extra_rows=self.min_extra_rows,
        )

    def to_dict(self) -> dict:
        start, end = self.sample_window
        return {
            "variables": list(self.variables),
            "lag_order": self.lag_order,
            "sample_window": [
                None if start is None else start.isoformat(),
                None if end is None else end.isoformat(),
            ],
            "include_intercept": self.include_intercept,
        }


@dataclass(frozen=True)
class EquationStats:
    """Summary statistics of one VAR equation, as printed under the coefficient tables"""

    r_squared: float
    adj_r_squared: float
    f_statistic: float
    log_likelihood: float
    aic: float
    sc: float
    mean_dependent: float
    sd_dependent: float
    ssr: float

    @staticmethod
    def names() -> list:
        """The eight reported statistics, in table order"""

        return [
            "r_squared",
            "adj_r_squared",
            "f_statistic",
            "log_likelihood",
            "aic",
            "sc",
            "mean_dependent",
            "sd_dependent",
        ]

    def to_dict(self) -> dict:
        return {name: float(getattr(self, name)) for name in self.names()}


@dataclass(frozen=True)
class VarFit:
    """Least squares estimate of a VAR system for one entity

    :param spec: The specification that was fitted
    :param entity_id: The entity the panel belongs to
    :param dates: Dates of the T_eff effective rows
    :param coefficients: k x m coefficient matrix, one row per equation
    :param standard_errors: k x m standard errors
    :param t_statistics: k x m t-statistics, residual variance on T_eff - m dof
    :param residuals: T_eff x k residual matrix
    :param equation_stats: One :class:`EquationStats` per equation
    :param residual_covariance: k x k residual covariance, denominator T_eff
    :param xtx_inverse: m x m inverse of the shared regressor cross product
    """

    spec: VarSpec
    entity_id: str
    dates: np.ndarray
    coefficients: np.ndarray
    standard_errors: np.ndarray
    t_statistics: np.ndarray
    residuals: np.ndarray
    equation_stats: tuple
    residual_covariance: np.ndarray
    xtx_inverse: np.ndarray
    metadata: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        for name in (
            "coefficients",
            "standard_errors",
            "t_statistics",
            "residuals",
            "residual_covariance",
            "xtx_inverse",
        ):
            array = np.array(getattr(self, name), dtype=float, copy=True)
            array.setflags(write=False)
            object.__setattr__(self, name, array)

        object.__setattr__(self, "equation_stats", tuple(self.equation_stats))

    @property
    def n_eff(self) -> int:
        """Effective sample size T_eff = T - p"""

        return int(self.residuals.shape[0])

    @property
    def df_resid(self) -> int:
        """Residual degrees of freedom T_eff - m"""

        return self.n_eff - self.spec.n_regressors

    @property
    def intercept(self) -> np.ndarray:
        """Intercept vector, zeros without an intercept term"""

        if not self.spec.include_intercept:
            return np.zeros(self.spec.k)

        return np.array(self.coefficients[:, 0])

    def lag_matrices(self) -> np.ndarray:
        """Returns the p x k x k array A with ``A[j-1][i, l]`` the effect of ``var_l(-j)``
        on equation i"""

        k, p = self.spec.k, self.spec.lag_order
        offset = int(self.spec.include_intercept)
        blocks = self.coefficients[:, offset:].reshape(k, k, p)
        return np.ascontiguousarray(np.transpose(blocks, (2, 0, 1)))

    def sample_span(self) -> tuple:
        """First and last effective date"""

        if self.n_eff == 0:
            return (None, None)

        return (
            self.dates[0].astype(datetime.date),
            self.dates[-1].astype(datetime.date),
        )


@dataclass(frozen=True)
class AggregatedFit:
    """Cross-entity means of homogeneous fits

    :param spec: The shared specification (window of the first fit)
    :param entity_ids: Entities averaged, in input order
    :param coefficients: k x m mean coefficients
    :param t_statistics: k x m mean t-statistics
    :param equation_stats: One ``{statistic: mean}`` dict per equation
    :param n_eff: Mean effective sample size
    """

    spec: VarSpec
    entity_ids: tuple
    coefficients: np.ndarray
    t_statistics: np.ndarray
    equation_stats: tuple
    n_eff: float
