# -*- coding: utf-8 -*-

"""
cdsvar.config.stats
~~~~~~~~~~~~~~~~~~~

This module contains the numerical constants shared by the statistical controllers.

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

# Package imports
import math


class StatsDefaults:
    """Tolerances and lag rules

    Usage::
        >>> from cdsvar.config.stats import StatsDefaults
        >>> StatsDefaults.adf_max_lag(1000)
        21
    """

    # Minimum sample size of every unit-root test
    unit_root_min_obs = 25

    # Symmetry tolerance accepted by the Cholesky factorization
    symmetry_tolerance = 1e-10

    # Basis below this (in spread index units) is no arbitrage
    basis_tolerance = 1.0

    # Counter-based generator behind every simulation
    random_algorithm = "Philox4x64-10"

    @staticmethod
    def adf_max_lag(nobs: int) -> int:
        """Upper bound of the ADF lag search, floor(12 (T/100)^(1/4))"""

        return int(math.floor(12.0 * (nobs / 100.0) ** 0.25))

    @staticmethod
    def newey_west_pilot_lag(nobs: int) -> int:
        """Pilot truncation of the automatic Bartlett bandwidth, floor(4 (T/100)^(2/9))"""

        return int(math.floor(4.0 * (nobs / 100.0) ** (2.0 / 9.0)))
