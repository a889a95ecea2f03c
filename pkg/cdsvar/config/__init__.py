# -*- coding: utf-8 -*-

"""
cdsvar.config
~~~~~~~~~~~~~

This package contains the static configuration of cdsvar: the reference firm data the
synthetic batch is shaped on, the study defaults and the statistical constants. Runtime
configuration (the study JSON document) is parsed into
:class:`cdsvar.models.config.StudyConfig`.

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""
