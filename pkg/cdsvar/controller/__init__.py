# -*- coding: utf-8 -*-

"""
cdsvar.controller

Business logic of cdsvar, one module per analysis stage.
"""
