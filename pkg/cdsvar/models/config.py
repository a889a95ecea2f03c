# -*- coding: utf-8 -*-

"""
cdsvar.models.config
~~~~~~~~~~~~~~~~~~~~

This module contains the class representation of a study run configuration, loaded from
a JSON document and overridden by command-line flags.

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

# Package imports
import json
import os
from dataclasses import asdict, dataclass, field, replace

import pandas as pd

# Local imports

# # Configs
from cdsvar.config.study import StudyDefaults

# # Exception Handling
from cdsvar.models.exceptions import InvalidOptionError, ParseError

# # Utilities
from cdsvar.utils.verify import config_check, kwarg_check


@dataclass(frozen=True)
class StudyConfig:
    """Everything ``run_study`` needs

    :param observations: Path of the observations CSV
    :param entities: Path of the entities CSV
    :param models: Model name to ordered variable list (Cholesky order)
    :param lag_order: VAR lag order p
    :param breakpoints: Dates at which each later sub-period starts
    :param period_ends: Model name to last date of its sample (inclusive)
    :param significance: Level of the t-tests and Granger decisions
    :param horizon: IRF horizon
    :param output: Report directory
    :param seed: Seed recorded in the manifest and used by simulation subcommands
    :param workers: Threads estimating entities in parallel
    :param plots: Whether SVG plots are rendered

    Usage::
        >>> from cdsvar.models.config import StudyConfig
        >>> config = StudyConfig.from_json("study.json")
        >>> config.with_overrides(lag_order=3).lag_order
        3
    """

    observations: str
    entities: str
    models: dict = field(default_factory=StudyDefaults.models)
    lag_order: int = StudyDefaults.lag_order
    breakpoints: list = field(default_factory=StudyDefaults.breakpoints)
    period_ends: dict = field(default_factory=StudyDefaults.period_ends)
    significance: float = StudyDefaults.significance
    horizon: int = StudyDefaults.horizon
    output: str = "report"
    seed: int = StudyDefaults.seed
    workers: int = StudyDefaults.workers
    plots: bool = True

    def __post_init__(self) -> None:
        kwarg_check(
            kwargs={
                "lag_order": self.lag_order,
                "horizon": self.horizon,
                "significance": self.significance,
                "seed": self.seed,
            },
            options=StudyDefaults.config_keys(),
            callback="StudyConfig",
        )

        if isinstance(self.workers, bool) or not isinstance(self.workers, int) \
                or self.workers < 1:
            raise InvalidOptionError(param="workers", value=self.workers,
                                     options=["integer >= 1"])

        if not self.observations or not self.entities:
            raise InvalidOptionError(
                param="observations/entities",
                value=(self.observations, self.entities),
                options=["both input paths are required"],
            )

        breakpoints = sorted(pd.Timestamp(value).date() for value in self.breakpoints)
        if len(set(breakpoints)) != len(breakpoints):
            raise InvalidOptionError(param="breakpoints", value=self.breakpoints,
                                     options=["distinct dates"])

        object.__setattr__(self, "breakpoints", [value.isoformat() for value in breakpoints])

    @classmethod
    def from_json(cls, path: str, **overrides) -> "StudyConfig":
        """Loads a configuration document; relative input and output paths are resolved
        against the document's directory; non-None ``overrides`` replace document values

        '''
        :raise ParseError: Not a JSON object
        :raise InvalidKwargError: Unknown key
        '''
        """

        try:
            with open(path, "r", encoding="utf-8") as handle:
                document = json.load(handle)
        except json.JSONDecodeError as exception:
            raise ParseError(path=path, row=exception.lineno, column=exception.colno,
                             value=exception.msg)

        if not isinstance(document, dict):
            raise ParseError(path=path, row=None, column="<document>", value=type(document))

        kwargs = config_check(document)
        base = os.path.dirname(os.path.abspath(path))

        for key in ("observations", "entities", "output"):
            if kwargs[key] is not None and not os.path.isabs(kwargs[key]):
                kwargs[key] = os.path.join(base, kwargs[key])

        overrides = {key: value for key, value in overrides.items() if value is not None}
        kwarg_check(kwargs=overrides, options=StudyDefaults.config_keys(), callback="from_json")
        kwargs.update(overrides)

        # without an output anywhere, the report lands in ./report
        if kwargs["output"] is None:
            del kwargs["output"]

        return cls(**kwargs)

    def with_overrides(self, **overrides) -> "StudyConfig":
        """Returns a copy where every non-None override replaces the stored value"""

        overrides = {key: value for key, value in overrides.items() if value is not None}
        kwarg_check(kwargs=overrides, options=StudyDefaults.config_keys(),
                    callback="with_overrides")

        return replace(self, **overrides)

    def to_dict(self) -> dict:
        return asdict(self)
