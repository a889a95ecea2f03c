# -*- coding: utf-8 -*-

"""
cdsvar.__version__
~~~~~~~~~~~~~~~~~~

Mentions the version release of the library.

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

VERSION = (0, 1, 0)

__version__ = ".".join(map(str, VERSION))
