# -*- coding: utf-8 -*-

"""
cdsvar.models.contract
~~~~~~~~~~~~~~~~~~~~~~

This module contains the class representations of a credit default swap contract, its
premium schedule and the CDS-bond basis report.

Amounts are undiscounted; each premium period is an even fraction of the year.

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

# Package imports
import math
import numbers
from dataclasses import dataclass
from enum import Enum

# Local imports

# # Exception Handling
from cdsvar.models.exceptions import InvalidContractError, NonIntegralPeriodCount


@dataclass(frozen=True)
class CdsContract:
    """A single-name CDS

    :param reference_entity: Entity whose credit risk is transferred
    :type reference_entity: str

    :param notional: Amount covered, > 0
    :type notional: float

    :param spread_bp: Annual premium in basis points, >= 0
    :type spread_bp: float

    :param tenor_years: Maturity in years, > 0
    :type tenor_years: float

    :param payments_per_year: Premium frequency, quarterly by default
    :type payments_per_year: int

    :param recovery_rate: Fraction of notional recovered after a credit event, in [0, 1]
    :type recovery_rate: float

    '''
    :raise InvalidContractError: A field violates its bounds
    '''

    Usage::
        >>> from cdsvar.models.contract import CdsContract
        >>> CdsContract("FTE", 10000000, 23.5, 5).period_count
        20
    """

    reference_entity: str
    notional: float
    spread_bp: float
    tenor_years: float
    payments_per_year: int = 4
    recovery_rate: float = 0.4

    def __post_init__(self) -> None:
        checks = [
            ("notional", self.notional, lambda value: value > 0),
            ("spread_bp", self.spread_bp, lambda value: value >= 0),
            ("tenor_years", self.tenor_years, lambda value: value > 0),
            ("recovery_rate", self.recovery_rate, lambda value: 0 <= value <= 1),
        ]
        for name, value, valid in checks:
            if not isinstance(value, numbers.Real) or isinstance(value, bool):
                raise InvalidContractError(field=name, value=value)
            if not math.isfinite(value) or not valid(value):
                raise InvalidContractError(field=name, value=value)

        if (
            isinstance(self.payments_per_year, bool)
            or int(self.payments_per_year) != self.payments_per_year
            or self.payments_per_year < 1
        ):
            raise InvalidContractError(field="payments_per_year", value=self.payments_per_year)

        object.__setattr__(self, "notional", float(self.notional))
        object.__setattr__(self, "spread_bp", float(self.spread_bp))
        object.__setattr__(self, "tenor_years", float(self.tenor_years))
        object.__setattr__(self, "payments_per_year", int(self.payments_per_year))
        object.__setattr__(self, "recovery_rate", float(self.recovery_rate))

    @classmethod
    def from_dict(cls, document: dict) -> "CdsContract":
        """Builds a contract from the JSON document layout
        ``{entity, notional, spread_bp, tenor_years, payments_per_year, recovery_rate}``"""

        return cls(
            reference_entity=str(document["entity"]),
            notional=document["notional"],
            spread_bp=document["spread_bp"],
            tenor_years=document["tenor_years"],
            payments_per_year=document.get("payments_per_year", 4),
            recovery_rate=document.get("recovery_rate", 0.4),
        )

    @property
    def period_count(self) -> int:
        """Number of premium periods, tenor_years x payments_per_year

        '''
        :raise NonIntegralPeriodCount: The product is not a whole number
        '''
        """

        periods = self.tenor_years * self.payments_per_year
        if abs(periods - round(periods)) > 1e-9:
            raise NonIntegralPeriodCount(self.tenor_years, self.payments_per_year)

        return int(round(periods))

    def to_dict(self) -> dict:
        return {
            "entity": self.reference_entity,
            "notional": self.notional,
            "spread_bp": self.spread_bp,
            "tenor_years": self.tenor_years,
            "payments_per_year": self.payments_per_year,
            "recovery_rate": self.recovery_rate,
        }


@dataclass(frozen=True)
class PremiumSchedule:
    """Premium leg of a contract: ``payments`` holds ``(period_index, amount)`` pairs,
    indices starting at 1"""

    payments: tuple
    per_period: float
    total: float


@dataclass(frozen=True)
class ResolutionPnl:
    """Profit and loss of both counterparties once the contract is resolved"""

    buyer_pnl: float
    seller_pnl: float


class BasisSignal(str, Enum):
    """Trade suggested by the CDS-bond basis"""

    SellCdsBuyBond = "SellCdsBuyBond"
    BuyCdsShortBond = "BuyCdsShortBond"
    NoArbitrage = "NoArbitrage"

    @classmethod
    def classify(cls, basis: float, tolerance: float) -> "BasisSignal":
        if basis > tolerance:
            return cls.SellCdsBuyBond
        if basis < -tolerance:
            return cls.BuyCdsShortBond
        return cls.NoArbitrage


@dataclass(frozen=True)
class BasisReport:
    """CDS spread against bond spread; ``basis = cds_spread - bond_spread``"""

    cds_spread: float
    bond_spread: float
    basis: float
    signal: BasisSignal
