# -*- coding: utf-8 -*-

"""
cdsvar.utils.filter
~~~~~~~~~~~~~~~~~~~

This module contains the filter pipeline applied to raw observation series before they are
transformed, e.g. to keep only an entity's observation window.

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

# Package imports
import numpy as np

# Local imports

# # Exception Handling
from cdsvar.models.exceptions import InvalidOptionError

# # Class Representation
from cdsvar.models.logger import Logger
from cdsvar.models.series import FieldKind, ObservationSeries

# # Utilities
from cdsvar.utils.time import to_day

logger = Logger.setup_logger(name="cdsvar.utils.filter")


def pipeline_component(func, data, exception_message, args):
    """A pipeline component which is responsible for sending functional arguments over
    to the selected target function

    '''
    :raise InvalidOptionError: The filter rejects its arguments
    '''

    Usage::
        >>> # internally used in cdsvar.utils.filter.pipeline
    """

    try:
        return func(data, *args)
    except (TypeError, ValueError) as exception:
        logger.warning(f"{exception_message}, {exception}. Arguments passed, {args}")
        raise InvalidOptionError(param=func.__name__, value=args, options=[str(exception)])


def pipeline(data: list, components: list) -> list:
    """Applies a sequence of filters to a list of ObservationSeries

    Each component is a dict naming the filter and carrying its arguments in order; an
    empty component is skipped.

    :param data: The series to filter
    :type data: list

    :param components: The filters, e.g. ``{"filter": "min_date", "min_date": "2001-01-01"}``
    :type components: list

    '''
    :raise InvalidOptionError: Unknown filter, or a filter given arguments it cannot use
    '''

    :return: The filtered series; series left without points are dropped
    :rtype: list

    Usage::
        >>> pipeline(
            data=series,
            components=[
                {"filter": "entity_ids", "entity_ids": ["FTE"]},
                {"filter": "min_date", "min_date": record.window_start},
                {"filter": "max_date", "max_date": record.window_end}
                if record is not None
                else {},
            ],
        )
    """

    # A local copy, the caller's list is left untouched
    __data = list(data)

    function_mappings = {
        "min_date": min_date,
        "max_date": max_date,
        "entity_ids": entity_ids,
        "field_kinds": field_kinds,
    }

    for component in components:

        if component == {}:
            continue

        if component["filter"] not in function_mappings:
            raise InvalidOptionError(
                param="filter", value=component["filter"], options=list(function_mappings)
            )

        __data = pipeline_component(
            func=function_mappings[f'{component["filter"]}'],
            data=__data,
            exception_message=f'[pipeline - {component["filter"]}] Filter rejected its arguments',
            args=tuple(list(component.values())[1:]),
        )

    return [series for series in __data if len(series) > 0]


def _keep(series: ObservationSeries, mask: np.ndarray) -> ObservationSeries:
    return ObservationSeries(
        entity_id=series.entity_id,
        field_kind=series.field_kind,
        dates=series.dates[mask],
        values=series.values[mask],
    )


def min_date(data: list, min_date) -> list:
    """Keeps the points dated on or after ``min_date``"""

    bound = to_day(min_date)
    return [_keep(series, series.dates >= bound) for series in data]


def max_date(data: list, max_date) -> list:
    """Keeps the points dated on or before ``max_date``"""

    bound = to_day(max_date)
    return [_keep(series, series.dates <= bound) for series in data]


def entity_ids(data: list, entity_ids: list) -> list:
    """Keeps the series of the given entities"""

    return [series for series in data if series.entity_id in entity_ids]


def field_kinds(data: list, field_kinds: list) -> list:
    """Keeps the series of the given field kinds"""

    kinds = [FieldKind(kind) for kind in field_kinds]
    return [series for series in data if series.field_kind in kinds]
