# -*- coding: utf-8 -*-

"""
cdsvar
~~~~~~

Share, bond and CDS market interdependence: series construction, unit-root tests,
difference VARs, Granger causality, impulse responses and CDS cash-flow mechanics.

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

from cdsvar.__version__ import __version__  # noqa: F401
