# -*- coding: utf-8 -*-

"""
cdsvar.config.study
~~~~~~~~~~~~~~~~~~~

This module contains the default study design: the two difference-VAR systems, their
lag order, the sub-period breakpoint and the end date of each model's sample.

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""


class StudyDefaults:
    """Defaults for :class:`cdsvar.models.config.StudyConfig`

    Usage::
        >>> from cdsvar.config.study import StudyDefaults
        >>> StudyDefaults.models()["VAR1"]
        ['RS', 'DBOND', 'DCDS']
    """

    lag_order = 5

    horizon = 15

    significance = 0.05

    seed = 20070208

    workers = 4

    @staticmethod
    def models() -> dict:
        """Variable sets of the two systems, in Cholesky order (returns first)"""

        return {
            "VAR1": ["RS", "DBOND", "DCDS"],
            "VAR2": ["RS", "DCDS"],
        }

    @staticmethod
    def breakpoints() -> list:
        """Sub-period breakpoints, the second sub-period starts on each date"""

        return ["2004-01-01"]

    @staticmethod
    def period_ends() -> dict:
        """Last date of the estimation sample for each model"""

        return {
            "VAR1": "2007-02-08",
            "VAR2": "2008-02-21",
        }

    @staticmethod
    def config_keys() -> list:
        """Keys accepted in a study configuration document"""

        return [
            "observations",
            "entities",
            "models",
            "lag_order",
            "breakpoints",
            "period_ends",
            "significance",
            "horizon",
            "output",
            "seed",
            "workers",
            "plots",
        ]
