# -*- coding: utf-8 -*-

"""
cdsvar.utils

This package contains all the internal utilities used within cdsvar.
"""
