# -*- coding: utf-8 -*-

"""
tests.utils.test_plot
~~~~~~~~~~~~~~~~~~~~~

For testing the functions under cdsvar/utils/plot.py

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

import numpy as np

from cdsvar.controller.causality import impulse_response
from cdsvar.models.var import VarSpec
from cdsvar.utils import plot

from tests.helper.builders import fake_fit


def test_irf_figure():

    spec = VarSpec(("RS", "DCDS"), 1)
    irf = impulse_response(
        fake_fit(spec, coefficients=[[0.0, 0.2, 0.0], [0.0, -40.0, 0.05]],
                 covariance=[[0.0004, -0.024], [-0.024, 36.0]]),
        horizon=15,
    )

    figure = plot.irf_figure(irf, "DCDS", "RS", "DCDS after a negative RS shock", negate=True)
    axes = figure.axes[0]
    x, y = axes.lines[0].get_data()

    assert axes.get_title() == "DCDS after a negative RS shock"
    assert np.array_equal(x, np.arange(16))
    assert np.allclose(y, -irf.response("DCDS", "RS"))
    assert y[1] > 0.0

    plot.close(figure)
