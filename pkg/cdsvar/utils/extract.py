# -*- coding: utf-8 -*-

"""
cdsvar.utils.extract
~~~~~~~~~~~~~~~~~~~~

This module deals with extracting per-entity fields out of collections of fits.

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

# Local imports

# # Class Representation
from cdsvar.models.var import EquationStats


def extract_statistics(fits: dict, statistics: list) -> dict:
    """Extracts equation statistics from a collection of fits

    :param fits: ``{entity_id: VarFit}``
    :type fits: dict

    :param statistics: Names among ``EquationStats.names()``
    :type statistics: list

    :return: ``{statistic: {entity_id: {equation: value}}}``
    :rtype: dict

    Usage::
        >>> from cdsvar.utils.extract import extract_statistics
        >>> extract_statistics(fits, ["r_squared"])["r_squared"]["FTE"]["DCDS"]
        0.0311...
    """

    extracted_fields = {}

    for statistic in statistics:
        if statistic in EquationStats.names():
            extracted_fields[statistic] = {}

    for entity_id, fit in fits.items():
        for statistic in extracted_fields:
            extracted_fields[statistic][entity_id] = {
                variable: float(getattr(stats, statistic))
                for variable, stats in zip(fit.spec.variables, fit.equation_stats)
            }

    return extracted_fields


def extract_samples(fits: dict) -> dict:
    """``{entity_id: {"t_eff", "first", "last"}}``, the effective sample of every fit"""

    samples = {}
    for entity_id, fit in fits.items():
        first, last = fit.sample_span()
        samples[entity_id] = {
            "t_eff": fit.n_eff,
            "first": None if first is None else first.isoformat(),
            "last": None if last is None else last.isoformat(),
        }

    return samples
