# -*- coding: utf-8 -*-

"""
cdsvar.controller.cds
~~~~~~~~~~~~~~~~~~~~~

This module implements the CDS contract cash flows: the premium leg, the protection
payout, both counterparties' result once the contract is resolved, and the CDS-bond basis
signal.

Premiums are paid in arrears over flat periods, undiscounted, with no accrued premium at
default.

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

# Local imports

# # Configs
from cdsvar.config.stats import StatsDefaults

# # Exception Handling
from cdsvar.models.exceptions import InvalidOptionError, PeriodsOutOfRange

# # Class Representation
from cdsvar.models.contract import (
    BasisReport,
    BasisSignal,
    CdsContract,
    PremiumSchedule,
    ResolutionPnl,
)


def premium_per_period(contract: CdsContract) -> float:
    """notional x spread_bp / (10000 x payments_per_year)"""

    return contract.notional * contract.spread_bp / (10000.0 * contract.payments_per_year)


def premium_schedule(contract: CdsContract) -> PremiumSchedule:
    """The premium leg over the life of the contract

    :param contract: The contract
    :type contract: CdsContract

    '''
    :raise NonIntegralPeriodCount: tenor_years x payments_per_year is not whole
    '''

    :return: The payments, per-period amount and total
    :rtype: PremiumSchedule

    Usage::
        >>> schedule = premium_schedule(CdsContract("FTE", 10000000, 23.5, 5, 4, 0.4))
        >>> schedule.per_period, schedule.total
        (5875.0, 117500.0)
    """

    periods = contract.period_count
    amount = premium_per_period(contract)

    return PremiumSchedule(
        payments=tuple((index, amount) for index in range(1, periods + 1)),
        per_period=amount,
        total=amount * periods,
    )


def default_payout(contract: CdsContract) -> float:
    """Protection paid after a credit event, notional x (1 - recovery_rate)

    Usage::
        >>> default_payout(CdsContract("FTE", 10000000, 23.5, 5, 4, 0.4))
        6000000.0
    """

    return contract.notional * (1.0 - contract.recovery_rate)


def pnl_at_resolution(
    contract: CdsContract, credit_event: bool, periods_paid: int
) -> ResolutionPnl:
    """Result of the protection buyer and seller

    Without a credit event the seller keeps the premiums paid; with one the buyer also
    receives the payout. The two results always sum to zero.

    :param contract: The contract
    :type contract: CdsContract

    :param credit_event: Whether the reference entity defaulted
    :type credit_event: bool

    :param periods_paid: Premium periods paid before resolution
    :type periods_paid: int

    '''
    :raise PeriodsOutOfRange: periods_paid outside 0..period_count
    '''

    :return: Buyer and seller results
    :rtype: ResolutionPnl
    """

    total = contract.period_count
    if isinstance(periods_paid, bool) or int(periods_paid) != periods_paid \
            or not 0 <= periods_paid <= total:
        raise PeriodsOutOfRange(periods_paid=periods_paid, total=total)

    premiums = premium_per_period(contract) * int(periods_paid)
    buyer = (default_payout(contract) if credit_event else 0.0) - premiums

    return ResolutionPnl(buyer_pnl=buyer, seller_pnl=-buyer)


def basis_signal(
    cds_spread: float, bond_spread: float, tolerance: float = StatsDefaults.basis_tolerance
) -> BasisReport:
    """CDS-bond basis and the replication trade it suggests

    A basis above the tolerance suggests selling protection and buying the bond; below
    minus the tolerance, buying protection and shorting the bond.

    Usage::
        >>> basis_signal(50, 30, 1).signal
        <BasisSignal.SellCdsBuyBond: 'SellCdsBuyBond'>
    """

    if not tolerance >= 0:
        raise InvalidOptionError(param="tolerance", value=tolerance, options=["tolerance >= 0"])

    basis = float(cds_spread) - float(bond_spread)

    return BasisReport(
        cds_spread=float(cds_spread),
        bond_spread=float(bond_spread),
        basis=basis,
        signal=BasisSignal.classify(basis, tolerance),
    )
