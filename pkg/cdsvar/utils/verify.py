# -*- coding: utf-8 -*-

"""
cdsvar.utils.verify
~~~~~~~~~~~~~~~~~~~

This module implements the verification of the keys and values passed in the JSON
documents (study configuration, CDS contract, simulation spec) and to the filtering
pipeline.

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

# Package imports
import numbers

# Local imports

# # Configs
from cdsvar.config.study import StudyDefaults

# # Exception Handling
from cdsvar.models.exceptions import InvalidKwargError, InvalidOptionError

# # Models
from cdsvar.models.series import MARKET_COLUMNS

# # Utilities
from cdsvar.utils.time import to_date


def kwarg_check(kwargs: dict, options: list, callback: str) -> bool:
    """Checks for keyword arguments amongst the kwarg argument to fall into the options list

    :param kwargs: A dictionary that contains the keyword key-value pair arguments
    :type kwargs: dict

    :param options: A list of possible arguments in kwargs
    :type options: list

    :param callback: The function that called 'kwarg_check' in the case of an exception
    :type callback: str

    '''
    :raise InvalidKwargError: A key outside of the options
    :raise InvalidOptionError: A known key with a value out of range
    '''

    :return: A boolean, whether the kwargs are appropriate or not
    :rtype: bool
    """

    if kwargs is not None:
        for key in kwargs.keys():
            if key not in options:
                raise InvalidKwargError(
                    func=callback,
                    key=key,
                    value=kwargs[key],
                    options=options,
                )

    # If 'lag_order' is in kwargs
    if "lag_order" in kwargs and not _is_integer(kwargs["lag_order"], minimum=1):
        raise InvalidOptionError(
            param="lag_order", value=kwargs["lag_order"], options=["integer >= 1"]
        )

    # If 'horizon' is in kwargs
    if "horizon" in kwargs and not _is_integer(kwargs["horizon"], minimum=1):
        raise InvalidOptionError(
            param="horizon", value=kwargs["horizon"], options=["integer >= 1"]
        )

    # If 'significance' is in kwargs
    if "significance" in kwargs and not (
        _is_real(kwargs["significance"]) and 0 < kwargs["significance"] < 1
    ):
        raise InvalidOptionError(
            param="significance", value=kwargs["significance"], options=["0 < level < 1"]
        )

    # If 'seed' is in kwargs
    if "seed" in kwargs and not (
        _is_integer(kwargs["seed"], minimum=0) and kwargs["seed"] < 2**64
    ):
        raise InvalidOptionError(
            param="seed", value=kwargs["seed"], options=["0 <= seed < 2**64"]
        )

    # If all tests pass, return True
    return True


def _is_integer(value, minimum: int = None) -> bool:
    """Integral numbers (bools excluded), optionally bounded below"""

    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        return False

    return minimum is None or value >= minimum


def _is_real(value) -> bool:
    return isinstance(value, numbers.Real) and not isinstance(value, bool)


def config_check(document: dict) -> dict:
    """Checks a study configuration document and fills the defaults in

    :param document: The parsed JSON document
    :type document: dict

    :return: The complete keyword arguments of a StudyConfig
    :rtype: dict
    """

    kwarg_check(kwargs=document, options=StudyDefaults.config_keys(), callback="config_check")

    models = document.get("models", StudyDefaults.models())
    if not isinstance(models, dict) or not models:
        raise InvalidOptionError(param="models", value=models,
                                 options=["non-empty mapping of model name to variables"])

    for name, variables in models.items():
        models_check(name, variables)

    workers = document.get("workers", StudyDefaults.workers)
    if not _is_integer(workers, minimum=1):
        raise InvalidOptionError(param="workers", value=workers, options=["integer >= 1"])

    return {
        "observations": document.get("observations"),
        "entities": document.get("entities"),
        "models": {name: list(variables) for name, variables in models.items()},
        "lag_order": document.get("lag_order", StudyDefaults.lag_order),
        "breakpoints": list(document.get("breakpoints", StudyDefaults.breakpoints())),
        "period_ends": dict(document.get("period_ends", StudyDefaults.period_ends())),
        "significance": document.get("significance", StudyDefaults.significance),
        "horizon": document.get("horizon", StudyDefaults.horizon),
        "output": document.get("output"),
        "seed": document.get("seed", StudyDefaults.seed),
        "workers": workers,
        "plots": bool(document.get("plots", True)),
    }


def models_check(name: str, variables: list) -> bool:
    """Model variable sets are two or three distinct market variables"""

    if (
        not isinstance(variables, (list, tuple))
        or len(variables) not in (2, 3)
        or len(set(variables)) != len(variables)
        or any(variable not in MARKET_COLUMNS for variable in variables)
    ):
        raise InvalidOptionError(
            param=f"models.{name}",
            value=variables,
            options=[f"2 or 3 distinct names among {', '.join(MARKET_COLUMNS)}"],
        )

    return True


def contract_check(document: dict) -> bool:
    """Checks the keys and value types of a CDS contract document"""

    kwarg_check(
        kwargs=document,
        options=[
            "entity",
            "notional",
            "spread_bp",
            "tenor_years",
            "payments_per_year",
            "recovery_rate",
        ],
        callback="contract_check",
    )

    for key in ("entity", "notional", "spread_bp", "tenor_years"):
        if key not in document:
            raise InvalidOptionError(param=key, value=None, options=["required"])

    for key in ("notional", "spread_bp", "tenor_years", "recovery_rate"):
        if key in document and not _is_real(document[key]):
            raise InvalidOptionError(param=key, value=document[key], options=["a number"])

    if "payments_per_year" in document and not _is_integer(
        document["payments_per_year"], minimum=1
    ):
        raise InvalidOptionError(
            param="payments_per_year",
            value=document["payments_per_year"],
            options=["integer >= 1"],
        )

    return True


def simulate_check(document: dict) -> bool:
    """Checks a simulation spec document, either the thirteen-entity batch or a single DGP"""

    kwarg_check(
        kwargs=document,
        options=[
            "mode",
            "seed",
            "rs_to_dcds",
            "dcds_to_dbond",
            "coupling_scale",
            "start_date",
            "end_date",
            "entity",
            "dgp",
            "levels",
        ],
        callback="simulate_check",
    )

    mode = document.get("mode", "paper_batch")
    if mode not in ["paper_batch", "dgp"]:
        raise InvalidOptionError(param="mode", value=mode, options=["paper_batch", "dgp"])

    if mode == "dgp":
        if "dgp" not in document:
            raise InvalidOptionError(param="dgp", value=None, options=["required in dgp mode"])
        dgp_check(document["dgp"])

    if "coupling_scale" in document and not _is_real(document["coupling_scale"]):
        raise InvalidOptionError(
            param="coupling_scale", value=document["coupling_scale"], options=["a number"]
        )

    return True


def dgp_check(document: dict) -> bool:
    """Checks the keys of a DGP spec document"""

    kwarg_check(
        kwargs=document,
        options=[
            "kind",
            "dimension",
            "lag_matrices",
            "coefficient",
            "intercept",
            "innovation_covariance",
            "length",
            "burn_in",
            "seed",
            "stable",
            "columns",
            "start_date",
        ],
        callback="dgp_check",
    )

    if document.get("kind") not in ["VarProcess", "RandomWalk", "WhiteNoise", "Ar1"]:
        raise InvalidOptionError(
            param="kind",
            value=document.get("kind"),
            options=["VarProcess", "RandomWalk", "WhiteNoise", "Ar1"],
        )

    if not _is_integer(document.get("length"), minimum=1):
        raise InvalidOptionError(param="length", value=document.get("length"),
                                 options=["integer >= 1"])

    return True


def breakpoints_check(breakpoints: list, first, last) -> bool:
    """Every breakpoint falls strictly after the first date of the data and no later than
    its last date, so each sub-period holds data

    :param first: First date of the data window
    :param last: Last date of the data window

    '''
    :raise InvalidOptionError: A breakpoint outside the data window
    '''
    """

    first, last = to_date(first), to_date(last)

    for breakpoint_ in breakpoints:
        day = to_date(breakpoint_)
        if not first < day <= last:
            raise InvalidOptionError(
                param="breakpoints",
                value=breakpoint_,
                options=[f"dates after {first.isoformat()} up to {last.isoformat()}"],
            )

    return True
