# -*- coding: utf-8 -*-

"""
cdsvar.models.exceptions
~~~~~~~~~~~~~~~~~~~~~~~~

This module contains the set of cdsvar exceptions used internally.

Every exception keeps the offending values as attributes, so callers (the CLI in
particular) can report them without parsing messages.

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""


class CdsVarException(Exception):
    """Base class for exceptions in this module"""

    pass


class StatisticalError(CdsVarException):
    """Base class for failures of an estimation or a test on otherwise well-formed input"""

    pass


class InvalidKwargError(CdsVarException):
    """Raised when a function or a JSON document is given keys that do not belong to it

    :var func: The function (or document) that was called
    :var key: The key that was passed
    :var value: The value along with that key
    :var options: The list of possible keys that can be passed
    """

    def __init__(
        self,
        func: str,
        key: str,
        value,
        options: list,
    ):
        """Initializing InvalidKwargError constructor"""
        self.func = func
        self.key = key
        self.value = value
        self.options = options

    def __str__(self):
        return (
            f'InvalidKwargError: The invalid kwarg, ["{self.key}": '
            f'{self.value}] was passed to "{self.func}".\n'
            f"A possible list of keys are, "
            f'{", ".join(str(option) for option in self.options)}'
        )

    def __repr__(self):
        return self.__str__()


class InvalidOptionError(CdsVarException):
    """Raised when a parameter is given a value outside its allowed options

    :var param: The parameter name
    :var value: The value used
    :var options: The possible values, or a description of the allowed range
    """

    def __init__(
        self,
        param: str,
        value,
        options: list,
    ):
        """Initializing InvalidOptionError constructor"""
        self.param = param
        self.value = value
        self.options = options

    def __str__(self):
        return (
            f'InvalidOptionError: Given {self.param} value, "{self.value}" '
            f'while possible {self.param} options, '
            f'[{", ".join(str(option) for option in self.options)}]'
        )

    def __repr__(self):
        return self.__str__()


class ParseError(CdsVarException):
    """Raised when an input file cannot be parsed

    :var path: The file being read
    :var row: 1-based row number in the file (header is row 1), None for document errors
    :var column: The offending column or key
    :var value: The raw value that failed to parse
    """

    def __init__(self, path: str, row, column: str, value) -> None:
        self.path = path
        self.row = row
        self.column = column
        self.value = value

    def __str__(self) -> str:
        location = f"row {self.row}, " if self.row is not None else ""
        return (
            f'ParseError: An exception occured while reading "{self.path}", '
            f'{location}column "{self.column}", value "{self.value}"'
        )

    def __repr__(self) -> str:
        return self.__str__()


class InvalidSeriesError(CdsVarException):
    """Raised when an observation series violates its construction invariants
    (unordered or duplicated dates, ask below bid, mismatched lengths)

    :var entity_id: The entity the series belongs to
    :var reason: What was violated
    """

    def __init__(self, entity_id: str, reason: str) -> None:
        self.entity_id = entity_id
        self.reason = reason

    def __str__(self) -> str:
        return f'InvalidSeriesError: Series of "{self.entity_id}" is invalid, {self.reason}'

    def __repr__(self) -> str:
        return self.__str__()


class NonPositivePrice(CdsVarException):
    """Raised when a share price is zero or negative, signalling corrupt input

    :var date: The date of the offending price
    :var value: The price
    """

    def __init__(self, date, value) -> None:
        self.date = date
        self.value = value

    def __str__(self) -> str:
        return f'NonPositivePrice: Share price "{self.value}" on {self.date} is not positive'

    def __repr__(self) -> str:
        return self.__str__()


class TooShort(StatisticalError):
    """Raised when a series is shorter than an operation requires

    :var operation: The operation that was called
    :var length: The length received
    :var required: The minimum length
    """

    def __init__(self, operation: str, length: int, required: int) -> None:
        self.operation = operation
        self.length = length
        self.required = required

    def __str__(self) -> str:
        return (
            f'TooShort: "{self.operation}" received {self.length} observations, '
            f"at least {self.required} are required"
        )

    def __repr__(self) -> str:
        return self.__str__()


class EmptyOverlap(CdsVarException):
    """Raised when series that must be joined on dates share no date

    :var operation: The operation that was called
    """

    def __init__(self, operation: str) -> None:
        self.operation = operation

    def __str__(self) -> str:
        return f'EmptyOverlap: The series passed to "{self.operation}" share no date'

    def __repr__(self) -> str:
        return self.__str__()


class TargetOutsideBracket(CdsVarException):
    """Raised when a target maturity is not strictly inside the bracketing maturities

    :var below: Lower maturity in years
    :var above: Upper maturity in years
    :var target: Requested maturity in years
    """

    def __init__(self, below, above, target) -> None:
        self.below = below
        self.above = above
        self.target = target

    def __str__(self) -> str:
        return (
            f"TargetOutsideBracket: Target maturity {self.target}y is not inside "
            f"({self.below}y, {self.above}y)"
        )

    def __repr__(self) -> str:
        return self.__str__()


class ZeroVariance(StatisticalError):
    """Raised when a statistic needs a non-degenerate variance

    :var variable: The variable (or column) with zero variance
    """

    def __init__(self, variable: str) -> None:
        self.variable = variable

    def __str__(self) -> str:
        return f'ZeroVariance: "{self.variable}" has zero variance'

    def __repr__(self) -> str:
        return self.__str__()


class DegenerateRegression(StatisticalError):
    """Raised when a unit-root regression cannot be estimated (constant or collinear input)

    :var test: The test being computed
    :var reason: Details
    """

    def __init__(self, test: str, reason: str) -> None:
        self.test = test
        self.reason = reason

    def __str__(self) -> str:
        return f'DegenerateRegression: "{self.test}" regression is degenerate, {self.reason}'

    def __repr__(self) -> str:
        return self.__str__()


class NonPositiveLongRunVariance(StatisticalError):
    """Raised when the long-run variance estimate is not strictly positive

    :var value: The estimate
    """

    def __init__(self, value: float) -> None:
        self.value = value

    def __str__(self) -> str:
        return f"NonPositiveLongRunVariance: Long-run variance estimate {self.value} <= 0"

    def __repr__(self) -> str:
        return self.__str__()


class InsufficientSample(StatisticalError):
    """Raised when a panel has too few rows for the requested VAR

    :var entity_id: The entity being estimated
    :var rows: Rows available
    :var required: Rows required
    """

    def __init__(self, entity_id: str, rows: int, required: int) -> None:
        self.entity_id = entity_id
        self.rows = rows
        self.required = required

    def __str__(self) -> str:
        return (
            f'InsufficientSample: "{self.entity_id}" has {self.rows} rows, '
            f"{self.required} are required"
        )

    def __repr__(self) -> str:
        return self.__str__()


class RankDeficientDesign(StatisticalError):
    """Raised when the VAR regressor matrix is not of full column rank

    :var rank: Numerical rank found
    :var columns: Number of regressor columns
    """

    def __init__(self, rank: int, columns: int) -> None:
        self.rank = rank
        self.columns = columns

    def __str__(self) -> str:
        return (
            f"RankDeficientDesign: Regressor matrix has rank {self.rank} "
            f"for {self.columns} columns"
        )

    def __repr__(self) -> str:
        return self.__str__()


class HeterogeneousSpecs(CdsVarException):
    """Raised when fits that must be aggregated do not share their specification shape

    :var expected: The reference shape
    :var found: The mismatching shape
    """

    def __init__(self, expected, found) -> None:
        self.expected = expected
        self.found = found

    def __str__(self) -> str:
        return f"HeterogeneousSpecs: Expected fits shaped {self.expected}, got {self.found}"

    def __repr__(self) -> str:
        return self.__str__()


class EmptyList(CdsVarException):
    """Raised when an aggregation receives nothing to aggregate

    :var operation: The operation that was called
    """

    def __init__(self, operation: str) -> None:
        self.operation = operation

    def __str__(self) -> str:
        return f'EmptyList: "{self.operation}" received an empty list'

    def __repr__(self) -> str:
        return self.__str__()


class NotPositiveDefinite(StatisticalError):
    """Raised when a matrix that must be symmetric positive definite is not

    :var reason: Details (asymmetry, non-positive pivot)
    """

    def __init__(self, reason: str) -> None:
        self.reason = reason

    def __str__(self) -> str:
        return f"NotPositiveDefinite: {self.reason}"

    def __repr__(self) -> str:
        return self.__str__()


class SingularCovariance(StatisticalError):
    """Raised when the residual covariance of a fit cannot be factorized

    :var reason: Details
    """

    def __init__(self, reason: str) -> None:
        self.reason = reason

    def __str__(self) -> str:
        return f"SingularCovariance: Residual covariance is degenerate, {self.reason}"

    def __repr__(self) -> str:
        return self.__str__()


class MismatchedShapes(CdsVarException):
    """Raised when impulse responses to be combined differ in horizon, ordering or size

    :var expected: The reference description
    :var found: The mismatching description
    """

    def __init__(self, expected, found) -> None:
        self.expected = expected
        self.found = found

    def __str__(self) -> str:
        return f"MismatchedShapes: Expected {self.expected}, got {self.found}"

    def __repr__(self) -> str:
        return self.__str__()


class NonPositiveCap(CdsVarException):
    """Raised when a market capitalization weight is zero or negative

    :var value: The capitalization
    """

    def __init__(self, value) -> None:
        self.value = value

    def __str__(self) -> str:
        return f'NonPositiveCap: Market capitalization "{self.value}" is not positive'

    def __repr__(self) -> str:
        return self.__str__()


class InvalidContractError(CdsVarException):
    """Raised when a CDS contract violates its invariants

    :var field: The offending field
    :var value: Its value
    """

    def __init__(self, field: str, value) -> None:
        self.field = field
        self.value = value

    def __str__(self) -> str:
        return f'InvalidContractError: Contract field "{self.field}" has invalid value {self.value}'

    def __repr__(self) -> str:
        return self.__str__()


class NonIntegralPeriodCount(CdsVarException):
    """Raised when tenor_years x payments_per_year is not a whole number of periods

    :var tenor_years: The tenor
    :var payments_per_year: The payment frequency
    """

    def __init__(self, tenor_years, payments_per_year) -> None:
        self.tenor_years = tenor_years
        self.payments_per_year = payments_per_year

    def __str__(self) -> str:
        return (
            f"NonIntegralPeriodCount: {self.tenor_years} years at {self.payments_per_year} "
            "payments per year is not a whole number of periods"
        )

    def __repr__(self) -> str:
        return self.__str__()


class PeriodsOutOfRange(CdsVarException):
    """Raised when the number of premium periods paid lies outside the contract

    :var periods_paid: The requested count
    :var total: The contract's period count
    """

    def __init__(self, periods_paid, total) -> None:
        self.periods_paid = periods_paid
        self.total = total

    def __str__(self) -> str:
        return f"PeriodsOutOfRange: {self.periods_paid} periods paid, contract has {self.total}"

    def __repr__(self) -> str:
        return self.__str__()


class UnstableProcess(StatisticalError):
    """Raised when a process flagged stable has companion spectral radius >= 1

    :var spectral_radius: The radius found
    """

    def __init__(self, spectral_radius: float) -> None:
        self.spectral_radius = spectral_radius

    def __str__(self) -> str:
        return (
            f"UnstableProcess: Companion matrix spectral radius {self.spectral_radius:.6f} "
            "is not below 1"
        )

    def __repr__(self) -> str:
        return self.__str__()


class NoEstimableEntity(StatisticalError):
    """Raised when not a single entity of a model could be estimated

    :var model: The model name
    :var skipped: ``{entity_id: reason}`` of every entity left out
    """

    def __init__(self, model: str, skipped: dict) -> None:
        self.model = model
        self.skipped = skipped

    def __str__(self) -> str:
        return (
            f'NoEstimableEntity: No entity could be estimated for "{self.model}", '
            f"{len(self.skipped)} skipped"
        )

    def __repr__(self) -> str:
        return self.__str__()
