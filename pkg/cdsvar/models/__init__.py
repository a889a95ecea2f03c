# -*- coding: utf-8 -*-

"""
cdsvar.models

Immutable domain types, the exception hierarchy and the logger setup.
"""
