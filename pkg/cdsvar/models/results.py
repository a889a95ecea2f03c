# -*- coding: utf-8 -*-

"""
cdsvar.models.results
~~~~~~~~~~~~~~~~~~~~~

This module contains the result types of the stationarity tests, the Granger causality
tests and the impulse response computation.

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

# Package imports
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

# Local imports

# # Exception Handling
from cdsvar.models.exceptions import InvalidOptionError, MismatchedShapes


class TestKind(str, Enum):
    """Unit-root and stationarity tests"""

    __test__ = False

    ADF = "ADF"
    PhillipsPerron = "PhillipsPerron"
    KPSS = "KPSS"

    @property
    def right_tailed(self) -> bool:
        """KPSS rejects in the right tail, the unit-root tests in the left"""

        return self is TestKind.KPSS


class Deterministic(str, Enum):
    """Deterministic terms of the test regression"""

    ConstantOnly = "ConstantOnly"
    ConstantAndTrend = "ConstantAndTrend"

    @property
    def regression(self) -> str:
        """statsmodels regression code"""

        return {"ConstantOnly": "c", "ConstantAndTrend": "ct"}[self.value]


class YieldProvenance(str, Enum):
    """How a five-year bond yield was obtained from a maturity ladder"""

    Exact = "Exact"
    Interpolated = "Interpolated"
    Substituted = "Substituted"


@dataclass(frozen=True)
class UnitRootReport:
    """Outcome of one unit-root or stationarity test

    ``reject_at_5pct`` and ``reject_at_1pct`` are derived from the statistic and the
    critical values in the test's rejection direction; for KPSS they mean "rejects
    stationarity".

    :param test_kind: The test
    :type test_kind: TestKind

    :param statistic: The test statistic
    :type statistic: float

    :param critical_values: ``{"1%": .., "5%": .., "10%": ..}``
    :type critical_values: dict

    :param nuisance: Lag order or bandwidth used and the deterministic terms
    :type nuisance: dict

    :param p_value: Approximate p-value
    :type p_value: float

    '''
    :raise InvalidOptionError: Critical values not ordered in the rejection direction
    '''
    """

    test_kind: TestKind
    statistic: float
    critical_values: dict
    nuisance: dict
    p_value: float = float("nan")
    reject_at_5pct: bool = field(init=False)
    reject_at_1pct: bool = field(init=False)

    def __post_init__(self) -> None:
        kind = TestKind(self.test_kind)
        values = {key: float(self.critical_values[key]) for key in ("1%", "5%", "10%")}

        ordered = (
            values["1%"] > values["5%"] > values["10%"]
            if kind.right_tailed
            else values["1%"] < values["5%"] < values["10%"]
        )
        if not ordered:
            raise InvalidOptionError(
                param="critical_values",
                value=values,
                options=[f"ordered in the {kind.value} rejection direction"],
            )

        object.__setattr__(self, "test_kind", kind)
        object.__setattr__(self, "statistic", float(self.statistic))
        object.__setattr__(self, "critical_values", values)
        object.__setattr__(self, "p_value", float(self.p_value))
        object.__setattr__(self, "reject_at_5pct", self.rejects(values["5%"]))
        object.__setattr__(self, "reject_at_1pct", self.rejects(values["1%"]))

    def rejects(self, critical_value: float) -> bool:
        """Compares the statistic against one critical value"""

        if self.test_kind.right_tailed:
            return bool(self.statistic > critical_value)

        return bool(self.statistic < critical_value)


@dataclass(frozen=True)
class GrangerResult:
    """Block-exclusion test of ``cause`` on ``effect``

    :param cause: Variable whose lags are excluded
    :param effect: Equation being tested
    :param f_statistic: F statistic, >= 0
    :param p_value: Upper-tail F probability
    :param dof: ``(p, T_eff - m)``
    :param significance: Level of the ``rejected`` decision
    """

    cause: str
    effect: str
    f_statistic: float
    p_value: float
    dof: tuple
    significance: float = 0.05
    reject_at_5pct: bool = field(init=False)
    rejected: bool = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "f_statistic", float(self.f_statistic))
        object.__setattr__(self, "p_value", float(self.p_value))
        object.__setattr__(self, "dof", tuple(int(value) for value in self.dof))
        object.__setattr__(self, "reject_at_5pct", bool(self.p_value < 0.05))
        object.__setattr__(self, "rejected", bool(self.p_value < self.significance))

    @property
    def direction(self) -> str:
        """Column label, e.g. ``RS cause DCDS``"""

        return f"{self.cause} cause {self.effect}"


@dataclass(frozen=True)
class IrfResult:
    """Orthogonalized impulse responses

    ``responses[h, i, j]`` is the response of ``ordering[i]`` at horizon h to a one
    standard deviation shock in ``ordering[j]``.

    :param horizon: Last horizon H
    :param ordering: Variable order of the Cholesky factorization
    :param responses: (H + 1) x k x k array
    :param shock_scale: Standard deviation of each orthogonal shock
    """

    horizon: int
    ordering: tuple
    responses: np.ndarray
    shock_scale: np.ndarray

    def __post_init__(self) -> None:
        ordering = tuple(self.ordering)
        responses = np.array(self.responses, dtype=float, copy=True)
        shock_scale = np.array(self.shock_scale, dtype=float, copy=True).reshape(-1)
        k = len(ordering)

        if responses.shape != (self.horizon + 1, k, k) or shock_scale.shape != (k,):
            raise MismatchedShapes(
                expected=(self.horizon + 1, k, k), found=responses.shape
            )

        responses.setflags(write=False)
        shock_scale.setflags(write=False)
        object.__setattr__(self, "ordering", ordering)
        object.__setattr__(self, "responses", responses)
        object.__setattr__(self, "shock_scale", shock_scale)

    @property
    def k(self) -> int:
        return len(self.ordering)

    def response(self, response_var: str, shock_var: str) -> np.ndarray:
        """Path of ``response_var`` over horizons 0..H after a shock in ``shock_var``"""

        for name in (response_var, shock_var):
            if name not in self.ordering:
                raise InvalidOptionError(param="variable", value=name,
                                         options=list(self.ordering))

        return self.responses[
            :, self.ordering.index(response_var), self.ordering.index(shock_var)
        ]

    def shape_key(self) -> tuple:
        return (self.horizon, self.ordering)


@dataclass(frozen=True)
class CausalityGrid:
    """Granger decisions of every entity in every direction of one model

    :param model: Model name
    :param directions: ``(cause, effect)`` pairs, in column order
    :param results: ``{entity_id: {(cause, effect): GrangerResult}}``
    """

    model: str
    directions: tuple
    results: dict

    @property
    def entity_ids(self) -> list:
        return list(self.results)

    def labels(self) -> list:
        """Column labels, ``<cause> cause <effect>``"""

        return [f"{cause} cause {effect}" for cause, effect in self.directions]

    def decision(self, entity_id: str, cause: str, effect: str) -> bool:
        return self.results[entity_id][(cause, effect)].rejected

    def totals(self) -> dict:
        """Number of entities rejecting non-causality, per direction"""

        return {
            (cause, effect): sum(
                int(row[(cause, effect)].rejected) for row in self.results.values()
            )
            for cause, effect in self.directions
        }
