# -*- coding: utf-8 -*-

"""
cdsvar.controller.save
~~~~~~~~~~~~~~~~~~~~~~

This module implements the saving business logic of the report: CSV tables, JSON
documents and SVG figures.

Every file is written to a temporary file in its target directory and then renamed over
the target, so a reader never sees a partially written report file.

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

# Package imports
import io
import json
import os
import tempfile

import pandas as pd

# Local imports

# # Class Representation
from cdsvar.models.logger import Logger

# # Utilities
from cdsvar.utils.format import to_jsonable

logger = Logger.setup_logger(name="cdsvar.controller.save")


def atomic_write(text: str, path: str) -> str:
    """Writes text to path through a temporary file and a rename

    :param text: The content
    :type text: str

    :param path: The destination, parent directories are created
    :type path: str

    :return: The absolute path written
    :rtype: str
    """

    path = os.path.abspath(path)
    directory = os.path.dirname(path)
    os.makedirs(directory, exist_ok=True)

    handle = tempfile.NamedTemporaryFile(
        mode="w", encoding="utf-8", newline="\n", dir=directory,
        prefix=f".{os.path.basename(path)}.", suffix=".tmp", delete=False,
    )
    try:
        with handle:
            handle.write(text)
        os.replace(handle.name, path)
    except BaseException:
        if os.path.exists(handle.name):
            os.remove(handle.name)
        raise

    logger.debug(f"Wrote {path}")

    return path


def save_as_csv_controller(data: pd.DataFrame, path: str, index: bool = False) -> str:
    """Save a frame as CSV to given file path

    :param data: The table to save
    :type data: pandas.DataFrame

    :param path: The path to save to
    :type path: str

    :param index: Whether the frame index is written as the first column
    :type index: bool

    :return: The path written
    :rtype: str
    """

    return atomic_write(data.to_csv(index=index, lineterminator="\n"), path)


def save_as_json_controller(data: dict, path: str) -> str:
    """Save a document as JSON to given file path, keys sorted, two-space indent

    :param data: The document, converted with ``to_jsonable``
    :type data: dict

    :param path: The path to save to
    :type path: str

    :return: The path written
    :rtype: str
    """

    text = json.dumps(to_jsonable(data), sort_keys=True, indent=2, allow_nan=False)
    return atomic_write(text + "\n", path)


def save_as_svg_controller(figure, path: str) -> str:
    """Save a matplotlib figure as SVG to given file path, without a creation date

    :param figure: The figure
    :type figure: matplotlib.figure.Figure

    :param path: The path to save to
    :type path: str

    :return: The path written
    :rtype: str
    """

    buffer = io.StringIO()
    figure.savefig(buffer, format="svg", metadata={"Date": None})

    return atomic_write(buffer.getvalue(), path)
