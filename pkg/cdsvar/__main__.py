# -*- coding: utf-8 -*-

"""
cdsvar.__main__
~~~~~~~~~~~~~~~

``python -m cdsvar`` entry point.

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

import sys

from cdsvar.cli import main

sys.exit(main())
