# -*- coding: utf-8 -*-

"""
cdsvar.utils.plot
~~~~~~~~~~~~~~~~~

This module draws the impulse response figures of the report. The non-interactive Agg
backend is used and SVG ids are salted with a constant, so the same responses always
render to the same bytes.

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

# Package imports
import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

plt.rcParams["svg.hashsalt"] = "cdsvar"


def irf_figure(irf, response_var: str, shock_var: str, title: str, negate: bool = False):
    """Line plot of one response path over horizons 0..H

    :param irf: The responses
    :type irf: IrfResult

    :param response_var: Variable responding
    :type response_var: str

    :param shock_var: Variable shocked
    :type shock_var: str

    :param title: Figure title
    :type title: str

    :param negate: Plot the response to a negative shock
    :type negate: bool

    :return: The figure, to be closed by the caller
    :rtype: matplotlib.figure.Figure
    """

    path = irf.response(response_var, shock_var)
    if negate:
        path = -path

    figure, axes = plt.subplots(figsize=(6.4, 4.0))
    axes.plot(np.arange(irf.horizon + 1), path, marker="o", color="tab:blue")
    axes.axhline(0.0, color="black", linewidth=0.8)
    axes.set_xlabel("Days after the shock")
    axes.set_ylabel(f"Response of {response_var}")
    axes.set_title(title)
    axes.set_xlim(0, irf.horizon)
    figure.tight_layout()

    return figure


def close(figure) -> None:
    plt.close(figure)
