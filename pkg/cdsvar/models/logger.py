# -*- coding: utf-8 -*-

"""
cdsvar.models.logger
~~~~~~~~~~~~~~~~~~~~

This module contains the logger setup shared by every cdsvar module.

The level is read from the ``LOG_LEVEL`` environment variable (defaults to INFO), and
``DEBUG=1`` forces DEBUG output.

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

# Package imports
import logging
import sys
import os


class Logger:
    """Logger factory for cdsvar

    Usage::
        >>> from cdsvar.models.logger import Logger
        >>> logger = Logger.setup_logger(name="cdsvar.controller.var")
        >>> logger.info("Fitting VAR1 for 13 entities")
    """

    # Format used by every handler attached here
    format_string = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    @staticmethod
    def setup_logger(name: str, level: str = None) -> logging.Logger:
        """Creates (or returns the already configured) named logger writing to stdout

        :param name: The logger name, usually the dotted module path
        :type name: str

        :param level: Explicit level overriding the environment, defaults to None
        :type level: str

        :return: The configured logger
        :rtype: logging.Logger
        """

        logger = logging.getLogger(name)

        # Attach the stdout handler only once per logger
        if not logger.handlers:
            handler = logging.StreamHandler(sys.stdout)
            handler.setFormatter(logging.Formatter(Logger.format_string))
            logger.addHandler(handler)
            logger.propagate = False

        log_level = (level or os.environ.get("LOG_LEVEL", "INFO")).upper()

        # Check if in DEBUG mode to show debugging output
        if os.environ.get("DEBUG") == "1":
            log_level = "DEBUG"

        try:
            logger.setLevel(log_level)
        except ValueError:
            logger.setLevel(logging.INFO)
            logger.warning(f"LOG_LEVEL: invalid value {log_level!r} - Defaulting to: INFO")

        return logger
